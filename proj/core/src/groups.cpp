#include "quasinv/groups.hpp"

#include "quasinv/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>

namespace quasinv {

namespace {

struct Factor {
    int rank = 1;
    int field_order = 1;
    bool coxeter = true;
    std::vector<Matrix<Cyclotomic>> subs;
    std::vector<int> degrees;
};

Matrix<Cyclotomic> identity(int r)
{
    Matrix<Cyclotomic> m(r, r);
    for (int i = 0; i < r; ++i)
        m(i, i) = Cyclotomic(1);
    return m;
}

Cyclotomic determinant(Matrix<Cyclotomic> m)
{
    std::size_t n = m.rows();
    Cyclotomic det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero())
            ++p;
        if (p == n)
            return Cyclotomic(0);
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        Cyclotomic inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero())
                continue;
            Cyclotomic f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

Matrix<Cyclotomic> matmul(const Matrix<Cyclotomic>& a, const Matrix<Cyclotomic>& b)
{
    Matrix<Cyclotomic> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

bool mat_equal(const Matrix<Cyclotomic>& a, const Matrix<Cyclotomic>& b)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j)))
                return false;
    return true;
}

Factor factor_a1()
{
    Factor f;
    Matrix<Cyclotomic> s(1, 1);
    s(0, 0) = Cyclotomic(-1);
    f.subs = {identity(1), s};
    f.degrees = {2};
    return f;
}

Factor factor_dihedral(int k)
{
    Factor f;
    f.rank = 2;
    f.field_order = 2 * k;
    for (int j = 0; j < k; ++j) {
        Matrix<Cyclotomic> r(2, 2);
        r(0, 0) = Cyclotomic::zeta(2 * k, 2 * j);
        r(1, 1) = Cyclotomic::zeta(2 * k, -2 * j);
        f.subs.push_back(r);
    }
    for (int j = 0; j < k; ++j) {
        Matrix<Cyclotomic> s(2, 2);
        s(0, 1) = Cyclotomic::zeta(2 * k, 2 * j);
        s(1, 0) = Cyclotomic::zeta(2 * k, -2 * j);
        f.subs.push_back(s);
    }
    f.degrees = {2, k};
    return f;
}

Factor factor_cyclic(int l)
{
    Factor f;
    f.field_order = l == 2 ? 1 : l;
    f.coxeter = l == 2;
    for (int r = 0; r < l; ++r) {
        Matrix<Cyclotomic> s(1, 1);
        s(0, 0) = Cyclotomic::zeta(l, -r);
        f.subs.push_back(s);
    }
    f.degrees = {l};
    return f;
}

int lcm_int(int a, int b)
{
    return a / std::gcd(a, b) * b;
}

Factor product(const Factor& a, const Factor& b)
{
    Factor f;
    f.rank = a.rank + b.rank;
    f.field_order = lcm_int(a.field_order, b.field_order);
    f.coxeter = a.coxeter && b.coxeter;
    for (const auto& sa : a.subs)
        for (const auto& sb : b.subs) {
            Matrix<Cyclotomic> m(f.rank, f.rank);
            for (int i = 0; i < a.rank; ++i)
                for (int j = 0; j < a.rank; ++j)
                    m(i, j) = sa(i, j).embed(f.field_order);
            for (int i = 0; i < b.rank; ++i)
                for (int j = 0; j < b.rank; ++j)
                    m(a.rank + i, a.rank + j) = sb(i, j).embed(f.field_order);
            f.subs.push_back(m);
        }
    f.degrees = a.degrees;
    f.degrees.insert(f.degrees.end(), b.degrees.begin(), b.degrees.end());
    return f;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

int parse_positive(const std::string& s, const std::string& spec)
{
    if (s.empty() || s.size() > 4 || !std::all_of(s.begin(), s.end(), ::isdigit))
        throw ParseError("bad integer in group spec '" + spec + "'");
    return std::stoi(s);
}

Factor parse_factor(const std::string& tok, const std::string& spec, int& rank1_factors, int& total)
{
    static const std::regex a1_re(R"(A1(\^(\d+))?)");
    static const std::regex i2_re(R"(I2\((\d+)\))");
    static const std::regex z_re(R"(Z/(\d+))");
    std::smatch m;
    if (std::regex_match(tok, m, a1_re)) {
        int n = m[2].matched ? parse_positive(m[2], spec) : 1;
        if (n < 1 || n > 8)
            throw ParseError("A1^n needs 1 <= n <= 8");
        Factor f = factor_a1();
        for (int i = 1; i < n; ++i)
            f = product(f, factor_a1());
        rank1_factors += n;
        total += n;
        return f;
    }
    if (std::regex_match(tok, m, i2_re)) {
        int k = parse_positive(m[1], spec);
        if (k < 3)
            throw ParseError("I2(k) needs k >= 3 (use A1 x A1 for k = 2)");
        if (k > 24)
            throw ParseError("I2(k) limited to k <= 24");
        total += 1;
        return factor_dihedral(k);
    }
    if (std::regex_match(tok, m, z_re)) {
        int l = parse_positive(m[1], spec);
        if (l < 2)
            throw ParseError("Z/l needs l >= 2");
        if (l > 60)
            throw ParseError("Z/l limited to l <= 60");
        rank1_factors += 1;
        total += 1;
        return factor_cyclic(l);
    }
    throw ParseError("unknown group '" + tok + "' in spec '" + spec + "'");
}

} // namespace

ReflectionGroup build_group(std::string spec, std::vector<std::string> vars, int field_order, bool coxeter,
                            std::vector<GroupElement> elements, std::vector<int> degrees)
{
    ReflectionGroup g;
    g.spec_ = std::move(spec);
    g.vars_ = std::move(vars);
    g.field_order_ = field_order;
    g.coxeter_ = coxeter;
    g.elements_ = std::move(elements);
    std::sort(degrees.begin(), degrees.end());
    g.degrees_ = std::move(degrees);
    int n = g.order(), r = g.rank();

    for (const auto& e : g.elements_) {
        std::vector<Polynomial> imgs;
        for (int i = 0; i < r; ++i) {
            Polynomial p(g.vars_);
            for (int j = 0; j < r; ++j)
                if (!e.sub(i, j).is_zero())
                    p += g.variable(j) * e.sub(i, j);
            imgs.push_back(p);
        }
        g.images_.push_back(std::move(imgs));
    }

    g.table_.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // act(ab) = act(a) o act(b) needs sub(ab) = sub(b) sub(a).
            Matrix<Cyclotomic> m = matmul(g.elements_[b].sub, g.elements_[a].sub);
            for (int c = 0; c < n; ++c)
                if (mat_equal(m, g.elements_[c].sub)) {
                    g.table_[a][b] = c;
                    break;
                }
            if (g.table_[a][b] < 0)
                throw std::logic_error("group is not closed under multiplication");
        }

    // Pseudoreflections: sub - 1 has rank one; its nonzero row is a multiple of alpha_H.
    for (int w = 1; w < n; ++w) {
        Matrix<Cyclotomic> d = g.elements_[w].sub;
        for (int i = 0; i < r; ++i)
            d(i, i) -= Cyclotomic(1);
        if (rank(d) != 1)
            continue;
        Polynomial alpha(g.vars_);
        for (int i = 0; i < r && alpha.is_zero(); ++i)
            for (int j = 0; j < r; ++j)
                if (!d(i, j).is_zero())
                    alpha += g.variable(j) * d(i, j);
        alpha = normalize_linear(alpha);
        auto it = std::find_if(g.hyperplanes_.begin(), g.hyperplanes_.end(),
                               [&](const Hyperplane& h) { return h.alpha == alpha; });
        if (it == g.hyperplanes_.end()) {
            Hyperplane h;
            h.alpha = alpha;
            h.elements = {0};
            g.hyperplanes_.push_back(h);
            it = std::prev(g.hyperplanes_.end());
        }
        it->elements.push_back(w);
    }
    for (auto& h : g.hyperplanes_)
        h.order = static_cast<int>(h.elements.size());

    std::vector<int> parent(g.hyperplanes_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int w = 0; w < n; ++w)
        for (std::size_t h = 0; h < g.hyperplanes_.size(); ++h) {
            int k = g.hyperplane_image(w, static_cast<int>(h));
            int a = find(static_cast<int>(h)), b = find(k);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, int> orbit_ids;
    for (std::size_t h = 0; h < g.hyperplanes_.size(); ++h) {
        int root = find(static_cast<int>(h));
        auto [it, ins] = orbit_ids.emplace(root, static_cast<int>(orbit_ids.size()));
        g.hyperplanes_[h].orbit = it->second;
    }
    g.orbit_count_ = static_cast<int>(orbit_ids.size());
    return g;
}

ReflectionGroup parse_group(const std::string& spec_in)
{
    std::string spec = trim(spec_in);
    if (spec.empty())
        throw ParseError("empty group spec");
    std::vector<std::string> toks;
    std::size_t pos = 0;
    while (true) {
        auto nxt = spec.find(" x ", pos);
        toks.push_back(trim(spec.substr(pos, nxt == std::string::npos ? std::string::npos : nxt - pos)));
        if (nxt == std::string::npos)
            break;
        pos = nxt + 3;
    }
    if (toks.size() > 1)
        for (const auto& t : toks)
            if (t.rfind("I2", 0) == 0)
                throw ParseError("products take rank-one factors only, got '" + t + "' in '" + spec + "'");
    int rank1 = 0, total = 0;
    Factor f = parse_factor(toks[0], spec, rank1, total);
    for (std::size_t i = 1; i < toks.size(); ++i)
        f = product(f, parse_factor(toks[i], spec, rank1, total));
    if (f.rank > 8)
        throw ParseError("total rank limited to 8");

    std::vector<std::string> vars;
    if (total == 1 && f.rank == 1) {
        vars = {"x"};
    } else if (total == 1 && f.rank == 2 && rank1 == 0) {
        vars = {"z1", "z2"};
    } else if (f.rank == 2 && rank1 == 2) {
        vars = {"x", "y"};
    } else {
        for (int i = 1; i <= f.rank; ++i)
            vars.push_back("x" + std::to_string(i));
    }

    std::vector<GroupElement> elements;
    for (auto& s : f.subs) {
        Cyclotomic d = determinant(s);
        elements.push_back({s, d.inverse()});
    }
    std::string canonical;
    for (std::size_t i = 0; i < toks.size(); ++i)
        canonical += (i ? " x " : "") + toks[i];
    return build_group(canonical, vars, f.field_order, f.coxeter, std::move(elements), f.degrees);
}

int ReflectionGroup::orbit_order(int orbit) const
{
    for (const auto& h : hyperplanes_)
        if (h.orbit == orbit)
            return h.order;
    throw DomainError("no such orbit");
}

int ReflectionGroup::orbit_size(int orbit) const
{
    return static_cast<int>(std::count_if(hyperplanes_.begin(), hyperplanes_.end(),
                                          [&](const Hyperplane& h) { return h.orbit == orbit; }));
}

int ReflectionGroup::inverse(int a) const
{
    for (int b = 0; b < order(); ++b)
        if (table_[a][b] == 0)
            return b;
    throw std::logic_error("element without inverse");
}

Polynomial ReflectionGroup::act(int w, const Polynomial& p) const
{
    if (w == 0)
        return p;
    return p.substitute(images_.at(w));
}

int ReflectionGroup::hyperplane_image(int w, int h) const
{
    Polynomial a = normalize_linear(act(w, hyperplanes_.at(h).alpha));
    for (std::size_t k = 0; k < hyperplanes_.size(); ++k)
        if (hyperplanes_[k].alpha == a)
            return static_cast<int>(k);
    throw std::logic_error("hyperplane arrangement is not W-stable");
}

void GroupAlgebraElement::add(int w, const Cyclotomic& c)
{
    if (c.is_zero())
        return;
    auto [it, ins] = terms_.emplace(w, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial GroupAlgebraElement::apply(const Polynomial& p) const
{
    Polynomial r = g_->zero();
    for (const auto& [w, c] : terms_)
        r += g_->act(w, p) * c;
    return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
{
    GroupAlgebraElement r(*a.g_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_)
            r.add(a.g_->product(wa, wb), ca * cb);
    return r;
}

GroupAlgebraElement idempotent(const ReflectionGroup& g, int h, int i)
{
    if (h < 0 || h >= static_cast<int>(g.hyperplanes().size()))
        throw DomainError("hyperplane index out of range");
    const Hyperplane& hp = g.hyperplanes().at(h);
    if (i < 0 || i >= hp.order)
        throw DomainError("idempotent index " + std::to_string(i) + " outside 0.." + std::to_string(hp.order - 1));
    GroupAlgebraElement e(g);
    Cyclotomic inv_n = Cyclotomic(Rational(1, hp.order));
    for (int w : hp.elements)
        e.add(w, g.element(w).det.pow(-i) * inv_n);
    return e;
}

bool Multiplicity::integral() const
{
    for (const auto& v : values)
        for (const auto& x : v)
            if (!x.is_integer())
                return false;
    return true;
}

Rational Multiplicity::max_value() const
{
    Rational m(0);
    for (const auto& v : values)
        for (const auto& x : v)
            if (x > m)
                m = x;
    return m;
}

std::string Multiplicity::to_string() const
{
    std::string out;
    for (std::size_t o = 0; o < values.size(); ++o) {
        if (o)
            out += ",";
        out += std::to_string(o) + ":";
        for (std::size_t i = 0; i < values[o].size(); ++i)
            out += (i ? "|" : "") + values[o][i].to_string();
    }
    return out;
}

static void validate_multiplicity(const ReflectionGroup& g, const Multiplicity& m)
{
    for (const auto& v : m.values)
        for (const auto& x : v) {
            if (x.sign() < 0)
                throw DomainError("multiplicities must be non-negative");
            if (!(x * Rational(2)).is_integer())
                throw DomainError("multiplicities must be integers or half-integers");
            if (!x.is_integer() && !(g.rank() == 1 && g.is_coxeter()))
                throw DomainError("half-integer multiplicities need a rank-one Coxeter group");
        }
}

Multiplicity constant_multiplicity(const ReflectionGroup& g, const Rational& m)
{
    Multiplicity mult;
    for (int o = 0; o < g.orbit_count(); ++o)
        mult.values.emplace_back(g.orbit_order(o) - 1, m);
    validate_multiplicity(g, mult);
    return mult;
}

Multiplicity parse_multiplicity(const ReflectionGroup& g, const std::string& text)
{
    std::string t = trim(text);
    if (t.empty())
        throw ParseError("empty multiplicity");
    if (t.find(':') == std::string::npos) {
        if (t.find('|') != std::string::npos) {
            if (g.orbit_count() != 1)
                throw ParseError("vector multiplicity without orbit needs a single orbit");
            t = "0:" + t;
        } else {
            return constant_multiplicity(g, Rational::parse(t));
        }
    }
    Multiplicity mult;
    for (int o = 0; o < g.orbit_count(); ++o)
        mult.values.emplace_back(g.orbit_order(o) - 1, Rational(0));
    std::stringstream ss(t);
    std::string item;
    std::vector<bool> seen(g.orbit_count(), false);
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("multiplicity entry '" + item + "' lacks 'orbit:'");
        std::string o_txt = trim(item.substr(0, colon));
        if (o_txt.empty() || !std::all_of(o_txt.begin(), o_txt.end(), ::isdigit))
            throw ParseError("bad orbit index '" + o_txt + "'");
        int o = std::stoi(o_txt);
        if (o >= g.orbit_count())
            throw DomainError("orbit " + o_txt + " does not exist; the group has " +
                              std::to_string(g.orbit_count()) + " orbit(s)");
        if (seen[o])
            throw ParseError("orbit " + o_txt + " given twice");
        seen[o] = true;
        std::vector<Rational> vals;
        std::stringstream vs(item.substr(colon + 1));
        std::string v;
        while (std::getline(vs, v, '|'))
            vals.push_back(Rational::parse(trim(v)));
        auto& dst = mult.values[o];
        if (vals.size() == 1)
            std::fill(dst.begin(), dst.end(), vals[0]);
        else if (vals.size() == dst.size())
            dst = vals;
        else
            throw ParseError("orbit " + o_txt + " needs " + std::to_string(dst.size()) + " value(s)");
    }
    validate_multiplicity(g, mult);
    return mult;
}

Rational multiplicity_sum(const ReflectionGroup& g, const Multiplicity& m)
{
    Rational s(0);
    for (const auto& h : g.hyperplanes())
        for (int i = 1; i < h.order; ++i)
            s += m.at(h.orbit, i);
    return s;
}

} // namespace quasinv
