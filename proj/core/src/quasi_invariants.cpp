#include "quasinv/quasi_invariants.hpp"

#include "quasinv/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace quasinv {

std::vector<long> GradedBasis::dims() const
{
    std::vector<long> d;
    for (const auto& l : layers)
        d.push_back(static_cast<long>(l.size()));
    return d;
}

std::vector<long> CWValuedBasis::dims() const
{
    std::vector<long> d;
    for (const auto& l : layers)
        d.push_back(static_cast<long>(l.size()));
    return d;
}

std::vector<Cyclotomic> SpanBuilder::reduce(std::vector<Cyclotomic> v) const
{
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::size_t p = pivots_[r];
        if (v[p].is_zero())
            continue;
        Cyclotomic f = v[p];
        for (std::size_t j = 0; j < dim_; ++j)
            if (!rows_[r][j].is_zero())
                v[j] -= f * rows_[r][j];
    }
    return v;
}

bool SpanBuilder::contains(const std::vector<Cyclotomic>& v) const
{
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

bool SpanBuilder::add(const std::vector<Cyclotomic>& v)
{
    if (v.size() != dim_)
        throw DomainError("span vector length mismatch");
    auto r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p].is_zero())
        ++p;
    if (p == dim_)
        return false;
    Cyclotomic inv = r[p].inverse();
    for (auto& c : r)
        if (!c.is_zero())
            c *= inv;
    for (auto& row : rows_) {
        if (row[p].is_zero())
            continue;
        Cyclotomic f = row[p];
        for (std::size_t j = 0; j < dim_; ++j)
            if (!r[j].is_zero())
                row[j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

std::vector<Cyclotomic> coefficient_vector(const Polynomial& p, int nvars, int d)
{
    auto monos = monomials_of_degree(nvars, d);
    std::map<Monomial, std::size_t, GrlexLess> index;
    for (std::size_t i = 0; i < monos.size(); ++i)
        index.emplace(monos[i], i);
    std::vector<Cyclotomic> v(monos.size(), Cyclotomic(0));
    for (const auto& [e, c] : p.terms()) {
        auto it = index.find(e);
        if (it == index.end())
            throw DomainError("polynomial is not homogeneous of degree " + std::to_string(d));
        v[it->second] = c;
    }
    return v;
}

Polynomial from_coefficients(const std::vector<std::string>& vars, int d, const std::vector<Cyclotomic>& c)
{
    auto monos = monomials_of_degree(static_cast<int>(vars.size()), d);
    Polynomial p(vars);
    for (std::size_t i = 0; i < monos.size(); ++i)
        p.add_term(monos[i], c[i]);
    return p;
}

int default_max_degree(const ReflectionGroup& g)
{
    const auto& d = g.invariant_degrees();
    return 4 * std::accumulate(d.begin(), d.end(), 0);
}

static int required_order(const Hyperplane& h, const Multiplicity& m, int i)
{
    Rational k = m.at(h.orbit, i) * Rational(h.order);
    if (!k.is_integer())
        throw DomainError("quasi-invariance needs integer multiplicities; use cw_valued_basis for half-integers");
    return static_cast<int>(k.num().get_si());
}

bool is_quasi_invariant(const ReflectionGroup& g, const Multiplicity& m, const Polynomial& p)
{
    if (p.nvars() != g.rank())
        throw DomainError("polynomial does not live in the group's coordinate ring");
    if (!m.integral())
        throw DomainError("quasi-invariance needs integer multiplicities; use cw_valued_basis for half-integers");
    for (std::size_t h = 0; h < g.hyperplanes().size(); ++h) {
        const Hyperplane& hp = g.hyperplanes()[h];
        if (g.is_coxeter()) {
            int k = required_order(hp, m, 1);
            if (k == 0)
                continue;
            Polynomial d = g.act(hp.elements[1], p) - p;
            if (divisibility_order(d, hp.alpha) < k)
                return false;
        } else {
            for (int i = 1; i < hp.order; ++i) {
                int k = required_order(hp, m, i);
                if (k == 0)
                    continue;
                Polynomial e = idempotent(g, static_cast<int>(h), hp.order - i).apply(p);
                if (divisibility_order(e, hp.alpha) < k)
                    return false;
            }
        }
    }
    return true;
}

namespace {

Polynomial mul_trunc(const Polynomial& a, const Polynomial& b, int slot, int k)
{
    Polynomial r(a.vars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            if (ea[slot] + eb[slot] >= k)
                continue;
            Monomial e = ea;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

// Powers of fixed linear forms, keeping only terms of slot-degree < k.
class TruncatedPowers {
public:
    TruncatedPowers(std::vector<Polynomial> forms, int slot, int k) : forms_(std::move(forms)), slot_(slot), k_(k)
    {
        for (const auto& f : forms_)
            powers_.push_back({Polynomial(f.vars(), Cyclotomic(1))});
    }

    const Polynomial& power(std::size_t j, int e)
    {
        auto& p = powers_[j];
        while (static_cast<int>(p.size()) <= e)
            p.push_back(mul_trunc(p.back(), forms_[j], slot_, k_));
        return p[e];
    }

    Polynomial monomial(const Monomial& a)
    {
        Polynomial r(forms_[0].vars(), Cyclotomic(1));
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] > 0)
                r = mul_trunc(r, power(j, a[j]), slot_, k_);
        return r;
    }

private:
    std::vector<Polynomial> forms_;
    int slot_, k_;
    std::vector<std::vector<Polynomial>> powers_;
};

} // namespace

Matrix<Cyclotomic> quasi_conditions(const ReflectionGroup& g, const Multiplicity& m, int degree)
{
    auto monos = monomials_of_degree(g.rank(), degree);
    Matrix<Cyclotomic> out(0, monos.size());
    for (std::size_t h = 0; h < g.hyperplanes().size(); ++h) {
        const Hyperplane& hp = g.hyperplanes()[h];
        AdaptedCoordinates ad = adapted_coordinates(hp.alpha);
        for (int i = 1; i < hp.order; ++i) {
            int k = required_order(hp, m, i);
            if (k == 0)
                continue;
            std::vector<TruncatedPowers> per_w;
            std::vector<Cyclotomic> weight;
            for (int w : hp.elements) {
                std::vector<Polynomial> forms;
                for (const auto& img : g.images(w))
                    forms.push_back(img.substitute(ad.images));
                per_w.emplace_back(std::move(forms), ad.slot, k);
                weight.push_back(g.element(w).det.pow(i));
            }
            std::map<Monomial, std::vector<Cyclotomic>, GrlexLess> rows;
            for (std::size_t col = 0; col < monos.size(); ++col) {
                Polynomial acc(g.vars());
                for (std::size_t t = 0; t < per_w.size(); ++t)
                    acc += per_w[t].monomial(monos[col]) * weight[t];
                for (const auto& [e, c] : acc.terms()) {
                    auto& row = rows[e];
                    if (row.empty())
                        row.assign(monos.size(), Cyclotomic(0));
                    row[col] = c;
                }
            }
            for (const auto& [e, row] : rows)
                out.append_row(row);
        }
    }
    return out;
}

static bool satisfies(const Matrix<Cyclotomic>& cond, const std::vector<Cyclotomic>& v)
{
    for (std::size_t i = 0; i < cond.rows(); ++i) {
        Cyclotomic s(0);
        for (std::size_t j = 0; j < cond.cols(); ++j)
            if (!cond(i, j).is_zero() && !v[j].is_zero())
                s += cond(i, j) * v[j];
        if (!s.is_zero())
            return false;
    }
    return true;
}

GradedBasis quasi_basis(const ReflectionGroup& g, const Multiplicity& m, int max_degree)
{
    if (max_degree < 0)
        throw DomainError("negative degree bound");
    if (!m.integral())
        throw DomainError("quasi_basis needs integer multiplicities; use cw_valued_basis for half-integers");
    GradedBasis b;
    b.group = g.spec();
    b.vars = g.vars();
    b.max_degree = max_degree;
    std::vector<Matrix<Cyclotomic>> conds;
    for (int d = 0; d <= max_degree; ++d) {
        auto monos = monomials_of_degree(g.rank(), d);
        Matrix<Cyclotomic> c = quasi_conditions(g, m, d);
        std::vector<Polynomial> layer;
        if (c.rows() == 0) {
            for (const auto& e : monos)
                layer.push_back(Polynomial::monomial(g.vars(), e));
        } else {
            for (const auto& v : nullspace(c))
                layer.push_back(from_coefficients(g.vars(), d, v));
        }
        b.layers.push_back(std::move(layer));
        conds.push_back(std::move(c));
    }
    // Spot-check multiplicative closure on one pair per pair of degrees.
    b.closure_checked = true;
    b.closed_under_product = true;
    for (int d1 = 0; d1 <= max_degree && b.closed_under_product; ++d1)
        for (int d2 = d1; d1 + d2 <= max_degree; ++d2) {
            if (b.layers[d1].empty() || b.layers[d2].empty())
                continue;
            Polynomial prod = b.layers[d1].front() * b.layers[d2].back();
            auto v = coefficient_vector(prod, g.rank(), d1 + d2);
            if (conds[d1 + d2].rows() > 0 && !satisfies(conds[d1 + d2], v)) {
                b.closed_under_product = false;
                break;
            }
        }
    return b;
}

HilbertSeries hilbert(const ReflectionGroup& g, const Multiplicity& m, int max_degree)
{
    GradedBasis b = quasi_basis(g, m, max_degree);
    return hilbert_from_basis(b.dims(), g.invariant_degrees());
}

Polynomial reynolds(const ReflectionGroup& g, const Polynomial& p)
{
    Polynomial r = g.zero();
    for (int w = 0; w < g.order(); ++w)
        r += g.act(w, p);
    return r * Cyclotomic(Rational(1, g.order()));
}

std::vector<Polynomial> fundamental_invariants(const ReflectionGroup& g)
{
    const auto& degs = g.invariant_degrees();
    int top = *std::max_element(degs.begin(), degs.end());
    std::vector<std::vector<Polynomial>> inv(top + 1);
    std::vector<Polynomial> fund;
    inv[0].push_back(g.one());
    for (int d = 1; d <= top; ++d) {
        auto monos = monomials_of_degree(g.rank(), d);
        SpanBuilder all(monos.size());
        for (const auto& e : monos) {
            Polynomial r = reynolds(g, Polynomial::monomial(g.vars(), e));
            if (!r.is_zero() && all.add(coefficient_vector(r, g.rank(), d)))
                inv[d].push_back(r);
        }
        SpanBuilder dec(monos.size());
        for (const auto& f : fund) {
            int e = f.degree();
            for (const auto& q : inv[d - e])
                dec.add(coefficient_vector(f * q, g.rank(), d));
        }
        for (const auto& q : inv[d])
            if (dec.add(coefficient_vector(q, g.rank(), d)))
                fund.push_back(q);
    }
    std::vector<int> got;
    for (const auto& f : fund)
        got.push_back(f.degree());
    if (got != degs)
        throw std::logic_error("basic invariant degrees disagree with the group data");
    return fund;
}

FreenessCertificate freeness_of_layers(const ReflectionGroup& g, const GradedBasis& b)
{
    FreenessCertificate cert;
    cert.group_order = g.order();
    cert.dims = b.dims();
    auto fund = fundamental_invariants(g);
    int D = b.max_degree;
    for (int d = 0; d <= D; ++d) {
        auto nmon = monomials_of_degree(g.rank(), d).size();
        SpanBuilder span(nmon);
        for (const auto& f : fund) {
            int e = d - f.degree();
            if (e < 0)
                continue;
            for (const auto& q : b.layers[e])
                span.add(coefficient_vector(f * q, g.rank(), d));
        }
        for (const auto& q : b.layers[d])
            if (span.add(coefficient_vector(q, g.rank(), d))) {
                cert.generators.push_back(q);
                cert.generator_degrees.push_back(d);
            }
    }
    auto inv = invariant_series(g.invariant_degrees(), D);
    std::vector<long> free_dims(D + 1, 0);
    for (int gd : cert.generator_degrees)
        for (int d = gd; d <= D; ++d)
            free_dims[d] += inv[d - gd].get_si();
    cert.hilbert_matches = free_dims == cert.dims;
    int count = static_cast<int>(cert.generators.size());
    if (count > g.order()) {
        cert.status = "not-free";
        cert.reason = "more than |W| minimal generators";
    } else if (count == g.order()) {
        cert.status = cert.hilbert_matches ? "free" : "not-free";
        cert.reason = cert.hilbert_matches ? "|W| generators and matching Hilbert series"
                                           : "|W| generators with relations";
    } else {
        cert.status = "inconclusive";
        cert.reason = "fewer than |W| generators up to the degree bound";
    }
    return cert;
}

FreenessCertificate freeness_certificate(const ReflectionGroup& g, const Multiplicity& m, int max_degree)
{
    return freeness_of_layers(g, quasi_basis(g, m, max_degree));
}

GorensteinResult gorenstein_shift(const ReflectionGroup& g, const Multiplicity& m, int max_degree)
{
    if (!g.is_coxeter())
        throw DomainError("gorenstein_shift is defined here for Coxeter groups only");
    FreenessCertificate cert = freeness_certificate(g, m, max_degree);
    if (cert.status != "free")
        throw Inconclusive("module is not certified free: " + cert.reason);
    GorensteinResult r;
    r.series = hilbert_from_basis(cert.dims, g.invariant_degrees());
    r.palindromic = r.series.palindromic();
    Rational expected = Rational(g.rank()) - Rational(2) * multiplicity_sum(g, m);
    r.expected = static_cast<int>(expected.num().get_si());
    if (r.palindromic)
        r.shift = r.series.functional_equation_shift();
    r.matches = r.palindromic && r.shift == r.expected;
    return r;
}

FiltrationResult filtration_check(const ReflectionGroup& g, const Multiplicity& lower, const Multiplicity& upper,
                                  int max_degree)
{
    for (std::size_t o = 0; o < lower.values.size(); ++o)
        for (std::size_t i = 0; i < lower.values[o].size(); ++i)
            if (lower.values[o][i] > upper.values.at(o).at(i))
                throw DomainError("filtration_check needs lower <= upper entrywise");
    FiltrationResult r;
    GradedBasis bl = quasi_basis(g, lower, max_degree);
    GradedBasis bu = quasi_basis(g, upper, max_degree);
    r.dims_lower = bl.dims();
    r.dims_upper = bu.dims();
    for (int d = 0; d <= max_degree; ++d) {
        Matrix<Cyclotomic> c = quasi_conditions(g, lower, d);
        for (const auto& q : bu.layers[d])
            if (c.rows() > 0 && !satisfies(c, coefficient_vector(q, g.rank(), d)))
                r.contained = false;
    }
    GradedBasis b0 = quasi_basis(g, constant_multiplicity(g, Rational(0)), max_degree);
    for (int d = 0; d <= max_degree; ++d)
        if (b0.layers[d].size() != monomials_of_degree(g.rank(), d).size())
            r.zero_is_full = false;
    return r;
}

static void check_half_integer(const Rational& k)
{
    if (k.sign() < 0 || !(k * Rational(2)).is_integer())
        throw DomainError("k must be a non-negative integer or half-integer");
}

CWValuedBasis cw_valued_basis(const Rational& k, int max_degree)
{
    check_half_integer(k);
    CWValuedBasis b;
    b.k = k;
    b.max_degree = max_degree;
    std::vector<std::string> vars{"x"};
    long twice_k = (k * Rational(2)).num().get_si();
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<CWElement> layer;
        Polynomial xd = Polynomial::monomial(vars, {d});
        layer.push_back({xd, Polynomial(vars)});
        if (d >= twice_k)
            layer.push_back({Polynomial(vars), xd});
        b.layers.push_back(std::move(layer));
    }
    return b;
}

bool cw_member(const Rational& k, const CWElement& f)
{
    check_half_integer(k);
    long twice_k = (k * Rational(2)).num().get_si();
    for (const auto& [e, c] : f.q.terms())
        if (e[0] < twice_k)
            return false;
    return true;
}

CWElement cw_act_x(const CWElement& f)
{
    Polynomial x = Polynomial::variable(f.p.vars().empty() ? std::vector<std::string>{"x"} : f.p.vars(), 0);
    return {f.p * x, f.q * x};
}

static Polynomial flip(const Polynomial& p)
{
    Polynomial r(p.vars());
    for (const auto& [e, c] : p.terms())
        r.add_term(e, e[0] % 2 == 0 ? c : -c);
    return r;
}

CWElement cw_act_s(const CWElement& f)
{
    return {flip(f.p), -flip(f.q)};
}

} // namespace quasinv
