#include "quasinv/ganea.hpp"

#include "quasinv/errors.hpp"

#include <algorithm>

namespace quasinv {

namespace {

const std::vector<std::string> kX{"x"};

Polynomial x_power(int d)
{
    return Polynomial::monomial(kX, {d});
}

PolyLayers polynomial_ring_layers(int max_degree)
{
    PolyLayers l;
    for (int d = 0; d <= max_degree; ++d)
        l.push_back({x_power(d)});
    return l;
}

Polynomial x_reflect(const Polynomial& p)
{
    Polynomial r(p.vars());
    for (const auto& [e, c] : p.terms())
        r.add_term(e, e[0] % 2 == 0 ? c : -c);
    return r;
}

std::vector<Polynomial> independent(const std::vector<Polynomial>& ps, int nvars, int d)
{
    SpanBuilder s(monomials_of_degree(nvars, d).size());
    std::vector<Polynomial> out;
    for (const auto& p : ps)
        if (!p.is_zero() && s.add(coefficient_vector(p, nvars, d)))
            out.push_back(p);
    return out;
}

} // namespace

bool same_spans(const PolyLayers& a, const PolyLayers& b, int nvars)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t d = 0; d < a.size(); ++d) {
        std::size_t n = monomials_of_degree(nvars, static_cast<int>(d)).size();
        SpanBuilder sa(n), sab(n);
        for (const auto& p : a[d]) {
            auto v = coefficient_vector(p, nvars, static_cast<int>(d));
            sa.add(v);
            sab.add(v);
        }
        SpanBuilder sb(n);
        for (const auto& p : b[d]) {
            auto v = coefficient_vector(p, nvars, static_cast<int>(d));
            sb.add(v);
            sab.add(v);
        }
        if (sa.rank() != sb.rank() || sab.rank() != sa.rank())
            return false;
    }
    return true;
}

FiberProductAlgebra fiber_product_basis(const std::vector<long>& dim_a, const std::vector<long>& dim_b,
                                        const std::vector<long>& dim_c, const GradedAlgebraMap& f,
                                        const GradedAlgebraMap& g)
{
    std::size_t nd = std::min({dim_a.size(), dim_b.size(), dim_c.size(), f.by_degree.size(), g.by_degree.size()});
    if (nd == 0)
        throw DomainError("empty graded data");
    FiberProductAlgebra fp;
    fp.max_degree = static_cast<int>(nd) - 1;
    for (std::size_t d = 0; d < nd; ++d) {
        const auto& F = f.by_degree[d];
        const auto& G = g.by_degree[d];
        std::size_t na = dim_a[d], nb = dim_b[d], nc = dim_c[d];
        if (F.cols() != na || G.cols() != nb || (nc > 0 && (F.rows() != nc || G.rows() != nc)))
            throw DomainError("graded map shape mismatch in degree " + std::to_string(d));
        Matrix<Cyclotomic> m(nc, na + nb);
        for (std::size_t i = 0; i < nc; ++i) {
            for (std::size_t j = 0; j < na; ++j)
                m(i, j) = F(i, j);
            for (std::size_t j = 0; j < nb; ++j)
                m(i, na + j) = -G(i, j);
        }
        std::vector<std::pair<Vec, Vec>> layer;
        for (const auto& v : nullspace(m))
            layer.emplace_back(Vec(v.begin(), v.begin() + na), Vec(v.begin() + na, v.end()));
        bool onto = (nc == 0) || (rank(F) == nc && rank(G) == nc);
        fp.surjective.push_back(onto);
        fp.dims.push_back(static_cast<long>(layer.size()));
        if (onto && static_cast<long>(layer.size()) != dim_a[d] + dim_b[d] - dim_c[d])
            fp.dimension_formula = false;
        fp.layers.push_back(std::move(layer));
    }
    return fp;
}

Vec PolyQuotient::project(int d, const Polynomial& p) const
{
    int nv = static_cast<int>(vars.size());
    std::size_t n = monomials_of_degree(nv, d).size();
    const auto& ker = kernel.at(d);
    const auto& cls = classes.at(d);
    Matrix<Cyclotomic> m(n, ker.size() + cls.size());
    std::size_t col = 0;
    for (const auto* group : {&ker, &cls})
        for (const auto& q : *group) {
            auto v = coefficient_vector(q, nv, d);
            for (std::size_t i = 0; i < n; ++i)
                m(i, col) = v[i];
            ++col;
        }
    auto sol = solve(m, coefficient_vector(p, nv, d));
    if (!sol)
        throw DomainError("element does not lie in the source algebra");
    return Vec(sol->begin() + ker.size(), sol->end());
}

GradedAlgebraMap PolyQuotient::projection() const
{
    GradedAlgebraMap f;
    for (std::size_t d = 0; d < source.size(); ++d) {
        Matrix<Cyclotomic> m(classes[d].size(), source[d].size());
        for (std::size_t j = 0; j < source[d].size(); ++j) {
            auto v = project(static_cast<int>(d), source[d][j]);
            for (std::size_t i = 0; i < v.size(); ++i)
                m(i, j) = v[i];
        }
        f.by_degree.push_back(std::move(m));
    }
    return f;
}

std::vector<long> PolyQuotient::dims() const
{
    std::vector<long> d;
    for (const auto& l : classes)
        d.push_back(static_cast<long>(l.size()));
    return d;
}

long PolyQuotient::total_dim() const
{
    long s = 0;
    for (long v : dims())
        s += v;
    return s;
}

PolyQuotient principal_quotient(const std::vector<std::string>& vars, const PolyLayers& a, const Polynomial& generator)
{
    PolyQuotient q;
    q.vars = vars;
    q.source = a;
    int nv = static_cast<int>(vars.size());
    int e = generator.degree();
    if (!generator.is_homogeneous() || e < 1)
        throw DomainError("quotient generator must be homogeneous of positive degree");
    for (std::size_t d = 0; d < a.size(); ++d) {
        int di = static_cast<int>(d);
        std::vector<Polynomial> prods;
        if (di - e >= 0)
            for (const auto& b : a[di - e])
                prods.push_back(generator * b);
        std::size_t n = monomials_of_degree(nv, di).size();
        SpanBuilder span(n);
        std::vector<Polynomial> ker, cls;
        for (const auto& p : prods)
            if (span.add(coefficient_vector(p, nv, di)))
                ker.push_back(p);
        for (const auto& p : a[d])
            if (span.add(coefficient_vector(p, nv, di)))
                cls.push_back(p);
        q.kernel.push_back(std::move(ker));
        q.classes.push_back(std::move(cls));
    }
    return q;
}

PolyFiberProduct poly_fiber_product(const std::vector<std::string>& vars, const PolyLayers& a, const PolyLayers& b,
                                    const std::vector<long>& dim_c, const ClassMap& f, const ClassMap& g)
{
    std::size_t nd = std::min({a.size(), b.size(), dim_c.size()});
    GradedAlgebraMap F, G;
    std::vector<long> da, db;
    auto build = [&](const PolyLayers& src, const ClassMap& map, GradedAlgebraMap& out, std::vector<long>& dims) {
        for (std::size_t d = 0; d < nd; ++d) {
            Matrix<Cyclotomic> m(dim_c[d], src[d].size());
            for (std::size_t j = 0; j < src[d].size(); ++j) {
                auto v = map(static_cast<int>(d), src[d][j]);
                for (std::size_t i = 0; i < v.size(); ++i)
                    m(i, j) = v[i];
            }
            out.by_degree.push_back(std::move(m));
            dims.push_back(static_cast<long>(src[d].size()));
        }
    };
    build(a, f, F, da);
    build(b, g, G, db);
    PolyFiberProduct r;
    r.algebra = fiber_product_basis(da, db, std::vector<long>(dim_c.begin(), dim_c.begin() + nd), F, G);
    for (std::size_t d = 0; d < nd; ++d) {
        std::vector<std::pair<Polynomial, Polynomial>> layer;
        for (const auto& [va, vb] : r.algebra.layers[d]) {
            Polynomial pa(vars), pb(vars);
            for (std::size_t j = 0; j < va.size(); ++j)
                pa += a[d][j] * va[j];
            for (std::size_t j = 0; j < vb.size(); ++j)
                pb += b[d][j] * vb[j];
            layer.emplace_back(pa, pb);
        }
        r.elements.push_back(std::move(layer));
    }
    Polynomial one(vars, Cyclotomic(1));
    r.contains_unit = nd > 0 && f(0, one) == g(0, one);
    r.closed_under_product = true;
    int D = static_cast<int>(nd) - 1;
    for (int d1 = 0; d1 <= D && r.closed_under_product; ++d1)
        for (int d2 = d1; d1 + d2 <= D; ++d2) {
            if (r.elements[d1].empty() || r.elements[d2].empty())
                continue;
            for (const auto& [a2, b2] : r.elements[d2]) {
                const auto& [a1, b1] = r.elements[d1].front();
                if (!(f(d1 + d2, a1 * a2) == g(d1 + d2, b1 * b2))) {
                    r.closed_under_product = false;
                    break;
                }
            }
            if (!r.closed_under_product)
                break;
        }
    return r;
}

PolyFiberProduct double_polynomial_fiber(int n, int max_degree)
{
    if (n < 1)
        throw DomainError("fiber over Q[x]/x^n needs n >= 1");
    PolyLayers ring = polynomial_ring_layers(max_degree);
    PolyQuotient c = principal_quotient(kX, ring, x_power(n));
    ClassMap proj = [c](int d, const Polynomial& p) { return c.project(d, p); };
    return poly_fiber_product(kX, ring, ring, c.dims(), proj, proj);
}

GaneaStep ganea_step(int m, const PolyLayers& qm, int max_degree)
{
    if (m < 0)
        throw DomainError("m must be non-negative");
    if (static_cast<int>(qm.size()) != max_degree + 1)
        throw DomainError("layers do not match the degree bound");
    GaneaStep s;
    s.m = m;
    s.quotient = principal_quotient(kX, qm, x_power(2));
    PolyLayers k(max_degree + 1);
    k[0].push_back(x_power(0));
    const PolyQuotient& c = s.quotient;
    ClassMap proj = [c](int d, const Polynomial& p) { return c.project(d, p); };
    s.fiber = poly_fiber_product(kX, qm, k, c.dims(), proj, proj);
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<Polynomial> firsts;
        for (const auto& [a, b] : s.fiber.elements[d])
            firsts.push_back(a);
        s.image.push_back(independent(firsts, 1, d));
    }
    auto a1 = parse_group("A1");
    GradedBasis next = quasi_basis(a1, constant_multiplicity(a1, Rational(m + 1)), max_degree);
    s.matches_next = same_spans(s.image, next.layers, 1);
    return s;
}

TowerResult ganea_tower(int steps, int max_degree)
{
    if (steps < 0)
        throw DomainError("steps must be non-negative");
    TowerResult t;
    PolyLayers q = polynomial_ring_layers(max_degree);
    for (int i = 0; i < steps; ++i) {
        GaneaStep s = ganea_step(i, q, max_degree);
        t.all_match = t.all_match && s.matches_next;
        q = s.image;
        t.steps.push_back(std::move(s));
    }
    return t;
}

HtInvariants h_t_invariants(int m, int max_degree)
{
    if (m < 0)
        throw DomainError("m must be non-negative");
    HtInvariants h;
    h.m = m;
    h.fiber = double_polynomial_fiber(2 * m + 1, max_degree);
    PolyLayers firsts(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) {
        const auto& layer = h.fiber.elements[d];
        // (p, q) is fixed iff p = s(q) and q = s(p); ambient coordinate is x^d in each factor.
        Matrix<Cyclotomic> cond(2, layer.size());
        for (std::size_t j = 0; j < layer.size(); ++j) {
            const auto& [p, q] = layer[j];
            cond(0, j) = (p - x_reflect(q)).coeff({d});
            cond(1, j) = (q - x_reflect(p)).coeff({d});
        }
        std::vector<std::pair<Polynomial, Polynomial>> inv;
        for (const auto& v : nullspace(cond)) {
            Polynomial p(kX), q(kX);
            for (std::size_t j = 0; j < v.size(); ++j) {
                p += layer[j].first * v[j];
                q += layer[j].second * v[j];
            }
            inv.emplace_back(p, q);
            firsts[d].push_back(p);
        }
        h.dims.push_back(static_cast<long>(inv.size()));
        h.invariants.push_back(std::move(inv));
    }
    auto a1 = parse_group("A1");
    GradedBasis qm = quasi_basis(a1, constant_multiplicity(a1, Rational(m)), max_degree);
    h.isomorphic_to_qm = h.dims == qm.dims() && same_spans(firsts, qm.layers, 1);
    return h;
}

X1Result x1_algebra(const ReflectionGroup& g, int max_degree)
{
    X1Result r;
    auto fund = fundamental_invariants(g);
    r.algebra.group = g.spec();
    r.algebra.vars = g.vars();
    r.algebra.max_degree = max_degree;
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<Polynomial> gens;
        if (d == 0)
            gens.push_back(g.one());
        for (const auto& f : fund) {
            int e = d - f.degree();
            if (e < 0)
                continue;
            for (const auto& mono : monomials_of_degree(g.rank(), e))
                gens.push_back(f * Polynomial::monomial(g.vars(), mono));
        }
        auto layer = independent(gens, g.rank(), d);
        long ideal_dim = d == 0 ? 0 : static_cast<long>(layer.size());
        r.coinvariant_dim += static_cast<long>(monomials_of_degree(g.rank(), d).size()) - ideal_dim;
        r.algebra.layers.push_back(std::move(layer));
    }
    r.coinvariant_matches_order = r.coinvariant_dim == g.order();
    r.freeness = freeness_of_layers(g, r.algebra);
    if (g.is_coxeter()) {
        GradedBasis q1 = quasi_basis(g, constant_multiplicity(g, Rational(1)), max_degree);
        r.equals_q1 = same_spans(r.algebra.layers, q1.layers, g.rank());
    }
    return r;
}

PresentationCheck presentation_check(int m, int max_degree)
{
    if (m < 0)
        throw DomainError("m must be non-negative");
    PresentationCheck pc;
    pc.m = m;
    int wxi = 2 * m + 1, weta = 2;
    std::vector<std::string> vars{"xi", "eta"};
    Polynomial rel = Polynomial::monomial(vars, {2, 0}) - Polynomial::monomial(vars, {0, 2 * m + 1});
    auto weighted = [&](int d) {
        std::vector<Monomial> out;
        for (int a = 0; a * wxi <= d; ++a)
            if ((d - a * wxi) % weta == 0)
                out.push_back({a, (d - a * wxi) / weta});
        return out;
    };
    auto a1 = parse_group("A1");
    std::vector<long> qdims = quasi_basis(a1, constant_multiplicity(a1, Rational(m)), max_degree).dims();
    pc.kernel_is_ideal = true;
    for (int d = 0; d <= max_degree; ++d) {
        auto monos = weighted(d);
        std::size_t n = monos.size();
        // Every monomial maps to x^d, so the map is the all-ones row.
        Matrix<Cyclotomic> map(n > 0 ? 1 : 0, n);
        for (std::size_t j = 0; j < n; ++j)
            map(0, j) = Cyclotomic(1);
        auto ker = nullspace(map);
        SpanBuilder ideal(n);
        int rd = 2 * wxi;
        for (const auto& mono : weighted(d - rd)) {
            Polynomial p = rel * Polynomial::monomial(vars, mono);
            Vec v(n, Cyclotomic(0));
            for (const auto& [e, c] : p.terms()) {
                auto it = std::find(monos.begin(), monos.end(), e);
                v[it - monos.begin()] = c;
            }
            ideal.add(v);
        }
        SpanBuilder both = ideal;
        for (const auto& v : ker)
            both.add(v);
        if (both.rank() != ideal.rank() || ideal.rank() != ker.size())
            pc.kernel_is_ideal = false;
        pc.kernel_dims.push_back(static_cast<long>(ker.size()));
        pc.ideal_dims.push_back(static_cast<long>(ideal.rank()));
        pc.quotient_dims.push_back(static_cast<long>(n - ideal.rank()));
    }
    pc.quotient_matches_qm = pc.quotient_dims == qdims;
    return pc;
}

FakeCohomology fake_cohomology_ring(long nb, int m, int max_degree)
{
    if (nb < 1)
        throw DomainError("N_B must be a positive integer");
    if (m < 0)
        throw DomainError("m must be non-negative");
    FakeCohomology fc;
    fc.nb = nb;
    fc.m = m;
    PolyLayers cur = polynomial_ring_layers(max_degree);
    Polynomial step = x_power(2) * Cyclotomic(Rational(nb));
    for (int j = 1; j <= m; ++j) {
        PolyLayers next(max_degree + 1);
        next[0].push_back(x_power(0));
        for (int d = 2; d <= max_degree; ++d)
            for (const auto& b : cur[d - 2])
                next[d].push_back(step * b);
        cur = std::move(next);
    }
    fc.layers = cur;
    for (int d = 0; d <= max_degree; ++d) {
        if (cur[d].empty()) {
            fc.lattice_index.push_back(0);
            continue;
        }
        Rational c = cur[d].front().coeff({d}).rational_value();
        Integer n = c.num();
        fc.lattice_index.push_back(n < 0 ? Integer(-n) : n);
    }
    auto a1 = parse_group("A1");
    fc.rational_equals_qm = same_spans(cur, quasi_basis(a1, constant_multiplicity(a1, Rational(m)), max_degree).layers, 1);
    return fc;
}

} // namespace quasinv
