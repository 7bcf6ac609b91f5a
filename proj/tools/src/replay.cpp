#include "quasinv/cli.hpp"

#include "quasinv/demazure.hpp"
#include "quasinv/elliptic.hpp"
#include "quasinv/fake_k.hpp"
#include "quasinv/ganea.hpp"
#include "quasinv/quasi_invariants.hpp"

namespace quasinv::cli {

bool ReplayResult::all_pass() const
{
    for (const auto& a : assertions)
        if (!a.pass)
            return false;
    return true;
}

const std::vector<std::string>& replay_suites()
{
    static const std::vector<std::string> suites{"gorenstein", "tower",          "p22",   "mulquasi", "cohxmr",
                                                 "rectorqi",   "triple-product", "elltw", "hcoh"};
    return suites;
}

namespace {

void check(ReplayResult& r, std::string name, bool pass, std::string detail = {})
{
    r.assertions.push_back({std::move(name), pass, std::move(detail)});
}

std::string ms(int m)
{
    return "m=" + std::to_string(m);
}

void gorenstein(ReplayResult& r)
{
    r.reference = "Q_m(W) is free of rank |W| over the invariants and Gorenstein with shift dim V - 2 sum m";
    auto g = parse_group("A1");
    for (int m = 0; m <= 4; ++m) {
        auto mult = constant_multiplicity(g, m);
        int D = 8 + 4 * m;
        auto cert = freeness_certificate(g, mult, D);
        check(r, "A1 " + ms(m) + " free of rank 2", cert.status == "free" && cert.generators.size() == 2);
        auto gs = gorenstein_shift(g, mult, D);
        std::vector<Integer> expect(2 * m + 2, 0);
        expect.front() = expect.back() = 1;
        std::string want = t_polynomial_string(expect);
        check(r, "A1 " + ms(m) + " numerator " + want, gs.series.numerator_string() == want, gs.series.numerator_string());
        check(r, "A1 " + ms(m) + " shift " + std::to_string(1 - 2 * m), gs.palindromic && gs.shift == 1 - 2 * m,
              std::to_string(gs.shift));
    }
}

void tower(ReplayResult& r)
{
    r.reference = "the image of Q_m x_{Q_m/(x^2)} k in Q_m is Q_{m+1}";
    auto t = ganea_tower(5, 20);
    for (const auto& s : t.steps) {
        check(r, "step " + ms(s.m) + " image equals Q_" + std::to_string(s.m + 1), s.matches_next);
        check(r, "step " + ms(s.m) + " fiber Q_m/(x^2) has total dimension 2", s.quotient.total_dim() == 2);
        check(r, "step " + ms(s.m) + " fiber product is a unital algebra",
              s.fiber.contains_unit && s.fiber.closed_under_product);
    }
    for (int m = 0; m <= 3; ++m)
        check(r, "T-equivariant model invariants " + ms(m) + " match Q_m", h_t_invariants(m, 16).isomorphic_to_qm);
}

void p22(ReplayResult& r)
{
    r.reference = "divided differences on rank-one quasi-invariants kill even powers and lower odd ones";
    auto g = parse_group("A1");
    for (int m = 0; m <= 3; ++m) {
        auto mult = constant_multiplicity(g, m);
        for (int k = 0; k <= 4; ++k) {
            auto odd = Polynomial::monomial(g.vars(), {2 * k + 2 * m + 1});
            auto even = Polynomial::monomial(g.vars(), {2 * k});
            auto expect = Polynomial::monomial(g.vars(), {2 * k}, Cyclotomic(2));
            check(r, ms(m) + " x^" + std::to_string(2 * k + 2 * m + 1) + " -> 2x^" + std::to_string(2 * k),
                  (delta_m(g, mult, 0, odd) - expect).is_zero());
            check(r, ms(m) + " x^" + std::to_string(2 * k) + " -> 0", delta_m(g, mult, 0, even).is_zero());
        }
    }
}

void mulquasi(ReplayResult& r)
{
    r.reference = "exponential quasi-invariants: 1, delta, ..., delta^(m-1) and delta^m Z[z, z^-1]";
    for (int m = 0; m <= 3; ++m) {
        auto b = exp_basis(m, -8, 8);
        bool all = true;
        for (const auto& e : b.elements)
            all = all && is_exp_quasi_invariant(m, e);
        check(r, ms(m) + " basis elements are exponential quasi-invariants", all);
        bool closed = true;
        for (std::size_t i = 0; i < b.elements.size(); i += 3)
            for (std::size_t j = i; j < b.elements.size(); j += 4)
                closed = closed && is_exp_quasi_invariant(m, b.elements[i] * b.elements[j]);
        check(r, ms(m) + " sampled products stay in the ring", closed);
    }
    check(r, "z is not in Q_1", !is_exp_quasi_invariant(1, LaurentElement::z_power(1)));
    check(r, "delta is in Q_1", is_exp_quasi_invariant(1, laurent_delta()));
}

void cohxmr(ReplayResult& r)
{
    r.reference = "Q'_m = Q + N_B x^2 Q'_(m-1) spans the same subspace of Q[x] as Q_m in every degree";
    for (long nb : {1L, 2L, 3L, 6L})
        for (int m = 0; m <= 3; ++m)
            check(r, "N_B=" + std::to_string(nb) + " " + ms(m), fake_cohomology_ring(nb, m, 20).rational_equals_qm);
}

void rectorqi(ReplayResult& r)
{
    r.reference = "Q_m(B) = Z + P Q_(m-1)(B) in Z[[t]] and its mod-p filtration quotient";
    auto p = IntSeries::parse("0,0,3,1,0,0,0,0,0,0,0,0");
    for (int m = 0; m <= 3; ++m) {
        auto ring = qmb(p, m, 12);
        check(r, ms(m) + " P^m t is a member", ring.member(p.pow(m) * IntSeries::parse("0,1,0,0,0,0,0,0,0,0,0,0")) == Verdict::True);
    }
    for (int m = 1; m <= 3; ++m) {
        auto small = qmb(p, m, 12);
        check(r, ms(m) + " p=5 rank 2", distinguishing_invariant(small, 5).rank == 2);
        check(r, ms(m) + " p=3 rank 1", distinguishing_invariant(small, 3).rank == 1);
    }
    auto bg = bg_series(12);
    check(r, "z - 2 + z^-1 at z = 1 + t equals t^2/(1+t)", laurent_to_series(laurent_delta(), 12) == bg);
    for (int m = 1; m <= 3; ++m) {
        auto ring = qmb(bg, m, 12);
        bool ok = true;
        for (const auto& e : exp_basis(m, -3, 3).elements)
            ok = ok && ring.member(laurent_to_series(e, 12)) == Verdict::True;
        check(r, ms(m) + " exponential basis lands in Q_m(BG)", ok);
    }
}

void triple_product(ReplayResult& r)
{
    r.reference = "sum and product forms of the theta function agree";
    auto s = theta(ThetaForm::Sum, -8, 8, 12), p = theta(ThetaForm::Product, -8, 8, 12);
    check(r, "sum = product through q^12 on [-8, 8]", s.series.agrees_with(p.series) && (s.series - p.series).is_zero());
    auto big = theta_series(ThetaForm::Product, 12);
    auto th = jacobi_theta_series(12);
    check(r, "theta = -z^(-1/2) Theta", (th + ZQSeries::monomial(-1, 0, 1, 12) * big).is_zero());
    check(r, "Theta(1/z) = -z^-1 Theta(z)", (big.reflect() + ZQSeries::monomial(-2, 0, 1, 12) * big).is_zero());
    check(r, "Theta(qz) = -z^-1 Theta(z)", check_recurrence(big, -1, 0, 2).verdict == Verdict::True);
}

void elltw(ReplayResult& r)
{
    r.reference = "twisted elliptic cohomology of F_m as a graded module";
    for (int n = 1; n <= 5; ++n) {
        auto s = section_basis(n, 12);
        bool fe = true;
        for (const auto& b : s.basis)
            fe = fe && check_functional_equation(b.series, n).verdict == Verdict::True;
        check(r, "sections of L^" + std::to_string(n) + " have dimension " + std::to_string(2 * n),
              s.dimension() == 2 * n && fe);
    }
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 5; ++n) {
            auto g = ell_graded_dimension(m, n, 12);
            int expect = (n + 1) + std::max(0, n - m - 1);
            check(r, ms(m) + " n=" + std::to_string(n) + " dimension " + std::to_string(expect),
                  g.verified && g.formula == expect);
        }
    for (int m = 0; m <= 2; ++m) {
        auto g = ell_g_generator(m, -12, 12, 12);
        check(r, "g_" + std::to_string(m) + " vanishes to order exactly " + std::to_string(2 * m + 1),
              g.simplification_holds && g.anti_invariant && g.theta_order == 2 * m + 1);
    }
}

void hcoh(ReplayResult& r)
{
    r.reference = "sheaf cohomology of the structure sheaf of F_m";
    for (int m = 0; m <= 5; ++m) {
        auto d = ell_sheaf_dims(m);
        check(r, ms(m) + " (1, " + std::to_string(2 * m + 2) + ", (" + std::to_string(m + 1) + ", " +
                     std::to_string(m + 1) + "))",
              d.h0 == 1 && d.h1 == 2 * m + 2 && d.h1_invariant == m + 1 && d.h1_anti == m + 1 && d.euler_consistent);
    }
}

} // namespace

ReplayResult replay(const std::string& suite)
{
    ReplayResult r;
    r.suite = suite;
    if (suite == "gorenstein")
        gorenstein(r);
    else if (suite == "tower")
        tower(r);
    else if (suite == "p22")
        p22(r);
    else if (suite == "mulquasi")
        mulquasi(r);
    else if (suite == "cohxmr")
        cohxmr(r);
    else if (suite == "rectorqi")
        rectorqi(r);
    else if (suite == "triple-product")
        triple_product(r);
    else if (suite == "elltw")
        elltw(r);
    else if (suite == "hcoh")
        hcoh(r);
    else
        throw ParseError("unknown replay suite '" + suite + "'");
    return r;
}

Json to_json(const ReplayResult& r)
{
    Json list = Json::array();
    int passed = 0;
    for (const auto& a : r.assertions) {
        Json j{{"name", a.name}, {"pass", a.pass}};
        if (!a.detail.empty())
            j["detail"] = a.detail;
        list.push_back(j);
        passed += a.pass ? 1 : 0;
    }
    return Json{{"suite", r.suite},
                {"reference", r.reference},
                {"passed", passed},
                {"failed", static_cast<int>(r.assertions.size()) - passed},
                {"assertions", list}};
}

} // namespace quasinv::cli
