#include "quasinv/elliptic.hpp"

#include "quasinv/linalg.hpp"
#include "quasinv/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace quasinv {

int default_q_order()
{
    if (const char* env = std::getenv("QUASINV_DEFAULT_QORDER")) {
        try {
            std::size_t used = 0;
            int n = std::stoi(env, &used);
            if (used == std::string(env).size() && n > 0)
                return n;
        } catch (const std::exception&) {
        }
    }
    return kDefaultQOrder;
}

ThetaForm parse_theta_form(const std::string& s)
{
    if (s == "sum")
        return ThetaForm::Sum;
    if (s == "product")
        return ThetaForm::Product;
    throw ParseError("theta form must be 'sum' or 'product', got '" + s + "'");
}

static ZQSeries one_minus(int w, int k, int n)
{
    return ZQSeries::constant(1, n) - ZQSeries::monomial(w, k, 1, n);
}

// prod_{0<k<N} (1 - q^k z)(1 - q^k / z)
static ZQSeries theta_tail(int n)
{
    ZQSeries r = ZQSeries::constant(1, n);
    for (int k = 1; k < n; ++k)
        r = r * one_minus(2, k, n) * one_minus(-2, k, n);
    return r;
}

ZQSeries theta_series(ThetaForm form, int n)
{
    if (n < 1)
        throw DomainError("q-order must be positive");
    if (form == ThetaForm::Product)
        return one_minus(2, 0, n) * theta_tail(n);
    ZQSeries s(n);
    for (int k = -n - 1; k <= n + 1; ++k) {
        long e = static_cast<long>(k) * (k - 1) / 2;
        if (e < n)
            s += ZQSeries::monomial(2 * k, static_cast<int>(e), k % 2 == 0 ? 1 : -1, n);
    }
    return ZQSeries::from_qseries(0, qseries_inverse(q_pochhammer(n), n), n) * s;
}

ZQSeries jacobi_theta_series(int n)
{
    ZQSeries lead = ZQSeries::monomial(1, 0, 1, n) - ZQSeries::monomial(-1, 0, 1, n);
    return lead * theta_tail(n);
}

static void check_window(int lo, int hi, int need)
{
    if (lo > -need || hi < need)
        throw DomainError("window [" + std::to_string(lo) + ", " + std::to_string(hi) + "] must contain [" +
                          std::to_string(-need) + ", " + std::to_string(need) + "]");
}

ThetaElement theta(ThetaForm form, int lo, int hi, int n)
{
    check_window(lo, hi, 2);
    return {theta_series(form, n).restrict(2 * lo, 2 * hi), 1, form == ThetaForm::Sum ? "Theta(sum)" : "Theta(product)"};
}

ThetaElement jacobi_theta(int lo, int hi, int n)
{
    if (lo > hi)
        throw DomainError("empty window");
    return {jacobi_theta_series(n).restrict(2 * lo - 1, 2 * hi + 1), std::nullopt, "theta"};
}

static QSeries q_shift(const QSeries& a, int s, int n)
{
    QSeries r(n);
    for (int i = 0; i + s < n && i < static_cast<int>(a.size()); ++i)
        r[i + s] = a[i];
    return r;
}

FunctionalEquationCertificate check_recurrence(const ZQSeries& f, int eps, int a2, int b2)
{
    FunctionalEquationCertificate c;
    c.q_order = f.q_order();
    c.relation = "a[w+" + std::to_string(b2) + "] = " + (eps < 0 ? "-" : "") + "q^((w+" + std::to_string(a2) + ")/2) a[w]";
    int lo, hi;
    if (f.complete()) {
        if (f.is_zero()) {
            c.verdict = Verdict::True;
            return c;
        }
        lo = f.lo() - b2;
        hi = f.hi();
    } else {
        lo = f.lo();
        hi = f.hi() - b2;
    }
    if (lo > hi)
        return c;
    c.lo = lo;
    c.hi = hi;
    int n = f.q_order();
    for (int w = lo; w <= hi; ++w) {
        QSeries x = f.coeff_series(w), y = f.coeff_series(w + b2);
        if ((w + a2) % 2 != 0) {
            if (qseries_valuation(x) >= 0 || qseries_valuation(y) >= 0) {
                c.verdict = Verdict::False;
                return c;
            }
            continue;
        }
        int e = (w + a2) / 2;
        QSeries lhs = q_shift(x, std::max(e, 0), n), rhs = q_shift(y, std::max(-e, 0), n);
        for (int i = 0; i < n; ++i)
            if (lhs[i] * Rational(eps) != rhs[i]) {
                c.verdict = Verdict::False;
                return c;
            }
    }
    c.verdict = Verdict::True;
    return c;
}

FunctionalEquationCertificate check_functional_equation(const ZQSeries& f, int n)
{
    auto c = check_recurrence(f, 1, 2 * n, 4 * n);
    c.relation = "f(qz) q^" + std::to_string(n) + " z^" + std::to_string(2 * n) + " = f(z)";
    return c;
}

static ZQSeries unit_section(int n, int r, int q_order)
{
    ZQSeries u(q_order);
    for (int t = -q_order - 1; t <= q_order + 1; ++t) {
        long e = static_cast<long>(t) * r + static_cast<long>(n) * t * t;
        if (e < q_order)
            u += ZQSeries::monomial(2 * (r + 2 * n * t), static_cast<int>(e), 1, q_order);
    }
    return u;
}

SectionSpace section_basis(int n, int q_order)
{
    if (n < 1)
        throw DomainError("section degree must be at least 1");
    SectionSpace s;
    s.degree = n;
    s.q_order = q_order;
    for (int r = -n + 1; r <= n; ++r) {
        s.indices.push_back(r);
        s.basis.push_back({unit_section(n, r, q_order), n, "u_" + std::to_string(r)});
    }
    return s;
}

std::optional<std::vector<QSeries>> section_coordinates(const SectionSpace& space, const ZQSeries& f)
{
    int n = std::min(space.q_order, f.q_order());
    std::vector<QSeries> a;
    ZQSeries rebuilt(n);
    for (std::size_t i = 0; i < space.basis.size(); ++i) {
        QSeries c = f.coeff_series(2 * space.indices[i]);
        c.resize(n);
        rebuilt += ZQSeries::from_qseries(0, c, n) * space.basis[i].series;
        a.push_back(c);
    }
    ZQSeries g = f.truncate_q(n);
    if (!g.complete())
        rebuilt = rebuilt.restrict(g.lo(), g.hi());
    if (!(rebuilt - g).is_zero())
        return std::nullopt;
    return a;
}

int qseries_rank(std::vector<std::vector<QSeries>> rows, int q_order)
{
    int rank = 0;
    std::vector<bool> used_col(rows.empty() ? 0 : rows[0].size(), false);
    while (!rows.empty()) {
        int best = q_order, bi = -1, bj = -1;
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (used_col[j])
                    continue;
                int v = qseries_valuation(rows[i][j]);
                if (v >= 0 && v < best) {
                    best = v;
                    bi = static_cast<int>(i);
                    bj = static_cast<int>(j);
                }
            }
        if (bi < 0)
            break;
        ++rank;
        used_col[bj] = true;
        // Every remaining entry has valuation >= best, so the quotients are power series.
        QSeries piv(q_order);
        for (int i = best; i < q_order; ++i)
            piv[i - best] = rows[bi][bj][i];
        QSeries inv = qseries_inverse(piv, q_order);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (static_cast<int>(k) == bi)
                continue;
            QSeries e(q_order);
            for (int i = best; i < q_order; ++i)
                e[i - best] = rows[k][bj][i];
            QSeries factor = qseries_mul(e, inv, q_order);
            for (std::size_t j = 0; j < rows[k].size(); ++j) {
                QSeries p = qseries_mul(factor, rows[bi][j], q_order);
                for (int i = 0; i < q_order; ++i)
                    rows[k][j][i] -= p[i];
            }
        }
        rows.erase(rows.begin() + bi);
    }
    return rank;
}

// Order of vanishing at w = 1 of a Laurent polynomial in w.
static int order_at_one(std::map<int, Rational> p)
{
    int order = 0;
    while (!p.empty()) {
        Rational s;
        for (const auto& [w, c] : p)
            s += c;
        if (!s.is_zero())
            return order;
        // p = (1 - w) g: descending synthetic division.
        std::map<int, Rational> g;
        Rational carry;
        int top = p.rbegin()->first;
        int bottom = p.begin()->first;
        for (int w = top; w > bottom; --w) {
            auto it = p.find(w);
            carry -= it == p.end() ? Rational(0) : it->second;
            if (!carry.is_zero())
                g[w - 1] = carry;
        }
        p = std::move(g);
        ++order;
    }
    return kInfiniteOrder;
}

ThetaDivisibility theta_divisibility(const ZQSeries& f, int k)
{
    ThetaDivisibility d;
    if (f.complete()) {
        ZQSeries s = f.reflect();
        d.symmetry = (s - f).is_zero() ? "invariant" : ((s + f).is_zero() ? "anti-invariant" : "none");
    } else {
        d.symmetry = "none";
        for (const auto& [w, a] : f.coeffs())
            if ((w <= f.lo() + 1 || w >= f.hi() - 1) && qseries_valuation(a) >= 0)
                return d;
    }
    int order = kInfiniteOrder;
    for (int j = 0; j < f.q_order(); ++j) {
        std::map<int, Rational> p;
        for (const auto& [w, a] : f.coeffs())
            if (j < static_cast<int>(a.size()) && !a[j].is_zero())
                p[w] = a[j];
        if (!p.empty())
            order = std::min(order, order_at_one(std::move(p)));
    }
    d.order = order;
    d.verdict = order >= k ? Verdict::True : Verdict::False;
    return d;
}

static std::vector<std::vector<QSeries>> coordinate_rows(const SectionSpace& space, const std::vector<ZQSeries>& elems)
{
    std::vector<std::vector<QSeries>> rows;
    for (const auto& e : elems) {
        auto c = section_coordinates(space, e);
        if (!c)
            throw std::logic_error("element is not a section of the expected degree");
        rows.push_back(*c);
    }
    return rows;
}

GradedDimension ell_graded_dimension(int m, int n, int q_order)
{
    if (m < 0 || n < 0)
        throw DomainError("m and n must be non-negative");
    if (n > kMaxEllDegree)
        throw DomainError("degree " + std::to_string(n) + " exceeds the bound " + std::to_string(kMaxEllDegree));
    GradedDimension g;
    g.m = m;
    g.n = n;
    g.invariant_dim = n + 1;
    g.anti_dim = std::max(0, n - m - 1);
    g.formula = g.invariant_dim + g.anti_dim;
    if (n == 0) {
        // Sections of the trivial bundle are the constants.
        g.invariant_lower = g.invariant_upper = 1;
        g.verified = true;
        return g;
    }
    SectionSpace space = section_basis(n, q_order);
    ZQSeries th = jacobi_theta_series(q_order);
    ZQSeries th2 = th * th;
    ZQSeries th2m = th2.negate_z();
    ZQSeries th_sq = th.square_z();

    // Invariant part: coordinates satisfy a_r = a_-r.
    Matrix<Rational> inv_cond(0, 2 * n);
    for (int r = 1; r < n; ++r) {
        std::vector<Rational> row(2 * n);
        row[r + n - 1] = 1;
        row[-r + n - 1] = -1;
        inv_cond.append_row(row);
    }
    g.invariant_upper = 2 * n - static_cast<int>(rank(inv_cond));
    std::vector<ZQSeries> inv_elems;
    for (int i = 0; i <= n; ++i)
        inv_elems.push_back(th2.pow(i) * th2m.pow(n - i));
    for (const auto& e : inv_elems)
        if ((e.reflect() - e).is_zero() == false)
            throw std::logic_error("invariant generator is not invariant");
    g.invariant_lower = qseries_rank(coordinate_rows(space, inv_elems), q_order);

    // Anti-invariant part divisible by theta^(2m): b_r = a_r = -a_-r for 0 < r < n,
    // and (z d/dz)^k f vanishes at z = 1 for odd k < 2m (even k vanish by symmetry).
    std::vector<std::vector<QSeries>> vanish;
    for (int k = 1; k < 2 * m; k += 2) {
        std::vector<QSeries> row;
        for (int r = 1; r < n; ++r) {
            QSeries s(q_order);
            for (int t = -q_order - 1; t <= q_order + 1; ++t) {
                long e = static_cast<long>(t) * r + static_cast<long>(n) * t * t;
                if (e < q_order)
                    s[e] += Rational(2) * Rational(ipow(Integer(r + 2 * n * t), k));
            }
            row.push_back(s);
        }
        vanish.push_back(row);
    }
    int rk = n > 1 ? qseries_rank(vanish, q_order) : 0;
    g.anti_upper = (n - 1) - rk;
    std::vector<ZQSeries> anti_elems;
    for (int i = 0; i <= n - m - 2; ++i) {
        ZQSeries e = th2.pow(m) * th_sq * th2.pow(i) * th2m.pow(n - m - 2 - i);
        if (!(e.reflect() + e).is_zero())
            throw std::logic_error("anti-invariant generator is not anti-invariant");
        if (theta_divisibility(e, 2 * m).verdict != Verdict::True)
            throw std::logic_error("generator not divisible by theta^(2m)");
        anti_elems.push_back(e);
    }
    g.anti_lower = anti_elems.empty() ? 0 : qseries_rank(coordinate_rows(space, anti_elems), q_order);

    g.verified = g.invariant_lower == g.invariant_upper && g.invariant_upper == g.invariant_dim &&
                 g.anti_lower == g.anti_upper && g.anti_upper == g.anti_dim;
    if (!g.verified)
        throw std::logic_error("graded dimension verification failed at m=" + std::to_string(m) + ", n=" + std::to_string(n));
    return g;
}

static int fixed_dim(const Matrix<Rational>& s)
{
    Matrix<Rational> d = s;
    for (std::size_t i = 0; i < d.rows(); ++i)
        d(i, i) -= 1;
    return static_cast<int>(s.cols() - rank(d));
}

SheafDims ell_sheaf_dims(int m)
{
    if (m < 0)
        throw DomainError("m must be non-negative");
    int b = 2 * m + 1;
    // H^0(O)^2 with s swapping the two copies.
    Matrix<Rational> sa = from_rows<Rational>({{0, 1}, {1, 0}}, 2);
    // H^0(O / J^(2m+1)) with basis t^i and s t^i = -(-1)^i t^i.
    Matrix<Rational> sb(b, b);
    for (int i = 0; i < b; ++i)
        sb(i, i) = i % 2 == 0 ? -1 : 1;
    // Difference of the two restrictions: (c1, c2) -> (c1 - c2) t^0.
    Matrix<Rational> phi(b, 2);
    phi(0, 0) = 1;
    phi(0, 1) = -1;
    // H^1(O)^2 with s (a, b) = (-b, -a).
    Matrix<Rational> sc = from_rows<Rational>({{0, -1}, {-1, 0}}, 2);

    Matrix<Rational> lhs(b, 2), rhs(b, 2);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                lhs(i, j) += phi(i, k) * sa(k, j);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < b; ++k)
                rhs(i, j) += sb(i, k) * phi(k, j);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < 2; ++j)
            if (lhs(i, j) != rhs(i, j))
                throw std::logic_error("restriction map is not equivariant");

    int rk = static_cast<int>(rank(phi));
    SheafDims d;
    d.m = m;
    d.h0 = 2 - rk;
    // Invariant kernel: kernel of phi stacked with (s - 1).
    Matrix<Rational> stacked = phi;
    for (int i = 0; i < 2; ++i) {
        std::vector<Rational> row{sa(i, 0), sa(i, 1)};
        row[i] -= 1;
        stacked.append_row(row);
    }
    d.h0_invariant = 2 - static_cast<int>(rank(stacked));
    int image_inv = fixed_dim(sa) - d.h0_invariant;
    int coker = b - rk;
    int coker_inv = fixed_dim(sb) - image_inv;
    d.h1 = coker + 2;
    d.h1_invariant = coker_inv + fixed_dim(sc);
    d.h1_anti = d.h1 - d.h1_invariant;
    // chi(E) = 2 chi(O) - chi(O / J^(2m+1)) = 0 - (2m + 1).
    d.euler_consistent = d.h0 - d.h1 == -b;
    return d;
}

GGenerator ell_g_generator(int m, int lo, int hi, int q_order)
{
    if (m < 0)
        throw DomainError("m must be non-negative");
    check_window(lo, hi, 2 * m + 2);
    ZQSeries big_theta = theta_series(ThetaForm::Product, q_order);
    ZQSeries th = jacobi_theta_series(q_order);
    ZQSeries th2m = (th * th).pow(m);
    ZQSeries g = (big_theta - big_theta.reflect()) * th2m;
    ZQSeries simple = (ZQSeries::constant(1, q_order) + ZQSeries::monomial(-2, 0, 1, q_order)) * big_theta * th2m;
    GGenerator r;
    r.simplification_holds = (g - simple).is_zero();
    r.anti_invariant = (g.reflect() + g).is_zero();
    auto d = theta_divisibility(g, 2 * m + 1);
    r.theta_order = d.order;
    r.divisible = d.verdict;
    Verdict next = theta_divisibility(g, 2 * m + 2).verdict;
    r.not_divisible = next == Verdict::Inconclusive ? next : (next == Verdict::False ? Verdict::True : Verdict::False);
    r.g = {g.restrict(2 * lo, 2 * hi), std::nullopt, "g_" + std::to_string(m)};
    return r;
}

} // namespace quasinv
