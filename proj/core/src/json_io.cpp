#include "quasinv/json_io.hpp"

#include "quasinv/errors.hpp"

namespace quasinv {

Json to_json(const Rational& r)
{
    return r.to_string();
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw ParseError("rational must be a string or an integer");
}

Json to_json(const Integer& n)
{
    if (n.fits_slong_p())
        return n.get_si();
    return n.get_str();
}

Json to_json(const Cyclotomic& c)
{
    Json coords = Json::array();
    for (const auto& r : c.coords())
        coords.push_back(to_json(r));
    return Json{{"zeta_order", c.order()}, {"coords", coords}};
}

Cyclotomic cyclotomic_from_json(const Json& j)
{
    if (j.is_string() || j.is_number_integer())
        return Cyclotomic(rational_from_json(j));
    if (!j.is_object() || !j.contains("zeta_order") || !j.contains("coords"))
        throw ParseError("cyclotomic must have zeta_order and coords");
    std::vector<Rational> coords;
    for (const auto& c : j.at("coords"))
        coords.push_back(rational_from_json(c));
    return Cyclotomic(j.at("zeta_order").get<int>(), coords);
}

Json to_json(const Polynomial& p)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"exp", e}, {"coeff", to_json(c)}});
    return Json{{"vars", p.vars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw ParseError("polynomial must have vars and terms");
    auto vars = j.at("vars").get<std::vector<std::string>>();
    Polynomial p(vars);
    for (const auto& t : j.at("terms")) {
        auto e = t.at("exp").get<Monomial>();
        if (e.size() != vars.size())
            throw ParseError("exponent length does not match the variables");
        p.add_term(e, cyclotomic_from_json(t.at("coeff")));
    }
    return p;
}

static std::string half_string(int w)
{
    return Rational(Integer(w), Integer(2)).to_string();
}

Json to_json(const LaurentElement& f)
{
    Json terms = Json::array();
    for (const auto& [w, c] : f.terms())
        terms.push_back(Json{{"z_exp", half_string(w)}, {"coeff", to_json(c)}});
    return Json{{"expr", f.to_string()}, {"terms", terms}};
}

Json to_json(const ZQSeries& s)
{
    Json terms = Json::array();
    for (const auto& [w, a] : s.coeffs())
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!a[j].is_zero())
                terms.push_back(Json::array({half_string(w), static_cast<int>(j), to_json(a[j])}));
    Json out{{"q_order", s.q_order()}, {"complete", s.complete()}};
    if (!s.complete())
        out["z_window"] = Json::array({half_string(s.lo()), half_string(s.hi())});
    out["terms"] = terms;
    return out;
}

Json to_json(const QSeries& s)
{
    Json a = Json::array();
    for (const auto& c : s)
        a.push_back(to_json(c));
    return a;
}

Json to_json(const IntSeries& s)
{
    Json a = Json::array();
    for (const auto& c : s.coeffs)
        a.push_back(to_json(c));
    return Json{{"order", s.order()}, {"coeffs", a}, {"expr", s.to_string()}};
}

Json to_json(Verdict v)
{
    return to_string(v);
}

Json to_json(const HilbertSeries& h)
{
    Json num = Json::array();
    for (const auto& c : h.numerator)
        num.push_back(to_json(c));
    return Json{{"numerator", h.numerator_string()},
                {"denominator", h.denominator_string()},
                {"numerator_coeffs", num},
                {"degrees", h.degrees},
                {"palindromic", h.palindromic()},
                {"functional_equation_shift", h.functional_equation_shift()}};
}

Json to_json(const Multiplicity& m)
{
    Json orbits = Json::array();
    for (const auto& v : m.values) {
        Json a = Json::array();
        for (const auto& r : v)
            a.push_back(to_json(r));
        orbits.push_back(a);
    }
    return Json{{"text", m.to_string()}, {"orbits", orbits}};
}

Json to_json(const Matrix<Cyclotomic>& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const ReflectionGroup& g)
{
    Json elements = Json::array();
    for (int w = 0; w < g.order(); ++w)
        elements.push_back(Json{{"substitution", to_json(g.element(w).sub)}, {"det", to_json(g.element(w).det)}});
    Json hyps = Json::array();
    for (const auto& h : g.hyperplanes())
        hyps.push_back(Json{{"alpha", to_json(h.alpha)}, {"order", h.order}, {"orbit", h.orbit}, {"elements", h.elements}});
    return Json{{"spec", g.spec()},
                {"rank", g.rank()},
                {"order", g.order()},
                {"field_order", g.field_order()},
                {"coxeter", g.is_coxeter()},
                {"vars", g.vars()},
                {"invariant_degrees", g.invariant_degrees()},
                {"orbit_count", g.orbit_count()},
                {"hyperplanes", hyps},
                {"elements", elements}};
}

Json layers_json(const std::vector<std::vector<Polynomial>>& layers)
{
    Json out = Json::array();
    for (const auto& layer : layers) {
        Json l = Json::array();
        for (const auto& p : layer)
            l.push_back(p.to_string());
        out.push_back(l);
    }
    return out;
}

Json to_json(const GradedBasis& b)
{
    Json out{{"group", b.group}, {"vars", b.vars}, {"max_degree", b.max_degree}, {"dims", dims_json(b.dims())}};
    Json layers = Json::array();
    for (const auto& layer : b.layers) {
        Json l = Json::array();
        for (const auto& p : layer)
            l.push_back(to_json(p));
        layers.push_back(l);
    }
    out["layers"] = layers;
    out["closure_checked"] = b.closure_checked;
    out["closed_under_product"] = b.closed_under_product;
    return out;
}

Json to_json(const FreenessCertificate& c)
{
    Json gens = Json::array();
    for (const auto& p : c.generators)
        gens.push_back(p.to_string());
    return Json{{"status", c.status},
                {"reason", c.reason},
                {"group_order", c.group_order},
                {"generator_degrees", c.generator_degrees},
                {"generators", gens},
                {"dims", dims_json(c.dims)},
                {"hilbert_matches", c.hilbert_matches}};
}

Json to_json(const GorensteinResult& r)
{
    return Json{{"shift", r.shift},
                {"expected", r.expected},
                {"palindromic", r.palindromic},
                {"matches", r.matches},
                {"series", to_json(r.series)}};
}

Json to_json(const FiltrationResult& r)
{
    return Json{{"contained", r.contained},
                {"zero_is_full", r.zero_is_full},
                {"dims_lower", dims_json(r.dims_lower)},
                {"dims_upper", dims_json(r.dims_upper)}};
}

Json to_json(const CWElement& e)
{
    return Json{{"e0", e.p.to_string()}, {"e1", e.q.to_string()}};
}

Json to_json(const CWValuedBasis& b)
{
    Json layers = Json::array();
    for (const auto& layer : b.layers) {
        Json l = Json::array();
        for (const auto& e : layer)
            l.push_back(to_json(e));
        layers.push_back(l);
    }
    return Json{{"k", to_json(b.k)}, {"max_degree", b.max_degree}, {"dims", dims_json(b.dims())}, {"layers", layers}};
}

Json to_json(const ExpBasis& b)
{
    Json elems = Json::array();
    for (std::size_t i = 0; i < b.elements.size(); ++i)
        elems.push_back(Json{{"label", b.labels[i]}, {"element", to_json(b.elements[i])}});
    return Json{{"m", b.m}, {"window", Json::array({b.lo, b.hi})}, {"elements", elems}};
}

Json to_json(const ExpMembership& m)
{
    Json lead = Json::array();
    for (const auto& c : m.leading)
        lead.push_back(to_json(c));
    Json out{{"rational", to_json(m.rational)}, {"integral", to_json(m.integral)}, {"leading", lead},
             {"decomposed", m.decomposed}};
    if (m.decomposed) {
        out["tail"] = to_json(m.tail);
        out["tail_in_window"] = m.tail_in_window;
    }
    return out;
}

Json to_json(const TruncatedExpSeries& s)
{
    Json a = Json::array();
    for (const auto& c : s.coeffs)
        a.push_back(to_json(c));
    return Json{{"order", s.order()}, {"coeffs", a}, {"expr", s.to_string()}};
}

Json to_json(const ChernResult& r)
{
    return Json{{"series", to_json(r.series)},
                {"odd_valuation", r.odd_valuation},
                {"in_completed_qm", to_json(r.in_completed_qm)}};
}

Json to_json(const NBResult& r)
{
    Json rector = Json::object();
    for (const auto& [p, s] : r.rector)
        rector[std::to_string(p)] = s;
    return Json{{"nb", to_json(r.nb)}, {"rector", rector}};
}

Json to_json(const DistinguishingInvariant& d)
{
    return Json{{"prime", d.prime},
                {"rank", d.rank},
                {"basis", d.basis},
                {"generator", d.generator},
                {"square_zero", d.square_zero}};
}

Json to_json(const ThetaElement& t)
{
    Json out{{"label", t.label}};
    if (t.degree)
        out["degree"] = *t.degree;
    else
        out["degree"] = nullptr;
    out["series"] = to_json(t.series);
    return out;
}

Json to_json(const FunctionalEquationCertificate& c)
{
    return Json{{"verdict", to_json(c.verdict)},
                {"relation", c.relation},
                {"w_range", Json::array({c.lo, c.hi})},
                {"q_order", c.q_order}};
}

Json to_json(const SectionSpace& s)
{
    Json basis = Json::array();
    for (const auto& b : s.basis)
        basis.push_back(to_json(b));
    return Json{{"degree", s.degree}, {"q_order", s.q_order}, {"dimension", s.dimension()}, {"basis", basis}};
}

Json to_json(const ThetaDivisibility& d)
{
    Json out{{"verdict", to_json(d.verdict)}, {"symmetry", d.symmetry}};
    if (d.order == kInfiniteOrder)
        out["order"] = "infinite";
    else
        out["order"] = d.order;
    return out;
}

Json to_json(const GradedDimension& g)
{
    return Json{{"m", g.m},
                {"n", g.n},
                {"dimension", g.formula},
                {"invariant_dim", g.invariant_dim},
                {"anti_invariant_dim", g.anti_dim},
                {"invariant_bounds", Json::array({g.invariant_lower, g.invariant_upper})},
                {"anti_invariant_bounds", Json::array({g.anti_lower, g.anti_upper})},
                {"verified", g.verified}};
}

Json to_json(const SheafDims& d)
{
    return Json{{"m", d.m},
                {"h0", d.h0},
                {"h1", d.h1},
                {"h0_invariant", d.h0_invariant},
                {"h1_split", Json::array({d.h1_invariant, d.h1_anti})},
                {"euler_consistent", d.euler_consistent}};
}

Json to_json(const GGenerator& g)
{
    return Json{{"simplification_holds", g.simplification_holds},
                {"anti_invariant", g.anti_invariant},
                {"theta_order", g.theta_order},
                {"divisible", to_json(g.divisible)},
                {"not_divisible_next", to_json(g.not_divisible)},
                {"g", to_json(g.g)}};
}

Json to_json(const GaneaStep& s)
{
    return Json{{"m", s.m},
                {"quotient_dims", dims_json(s.quotient.dims())},
                {"quotient_total_dim", s.quotient.total_dim()},
                {"fiber_dims", dims_json(s.fiber.algebra.dims)},
                {"contains_unit", s.fiber.contains_unit},
                {"closed_under_product", s.fiber.closed_under_product},
                {"image", layers_json(s.image)},
                {"matches_next", s.matches_next}};
}

Json to_json(const TowerResult& t)
{
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back(to_json(s));
    return Json{{"steps", steps}, {"all_match", t.all_match}};
}

Json to_json(const HtInvariants& h)
{
    return Json{{"m", h.m},
                {"fiber_dims", dims_json(h.fiber.algebra.dims)},
                {"invariant_dims", dims_json(h.dims)},
                {"isomorphic_to_qm", h.isomorphic_to_qm}};
}

Json to_json(const X1Result& x)
{
    return Json{{"dims", dims_json(x.algebra.dims())},
                {"freeness", to_json(x.freeness)},
                {"coinvariant_dim", x.coinvariant_dim},
                {"coinvariant_matches_order", x.coinvariant_matches_order},
                {"equals_q1", x.equals_q1}};
}

Json to_json(const FakeCohomology& f)
{
    Json idx = Json::array();
    for (const auto& i : f.lattice_index)
        idx.push_back(to_json(i));
    return Json{{"nb", f.nb},
                {"m", f.m},
                {"layers", layers_json(f.layers)},
                {"lattice_index", idx},
                {"rational_equals_qm", f.rational_equals_qm}};
}

} // namespace quasinv
