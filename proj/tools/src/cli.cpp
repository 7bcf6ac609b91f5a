#include "quasinv/cli.hpp"

#include "quasinv/demazure.hpp"
#include "quasinv/elliptic.hpp"
#include "quasinv/fake_k.hpp"
#include "quasinv/ganea.hpp"
#include "quasinv/quasi_invariants.hpp"

#include <CLI11.hpp>

#include <functional>
#include <sstream>

#ifndef QUASINV_VERSION
#define QUASINV_VERSION "0.0.0"
#endif

namespace quasinv::cli {

namespace {

struct Report {
    Json claims = Json::array();
    Json payload = Json::object();
    int exit_code = kOk;

    void claim(const std::string& name, Json value, const std::string& tag)
    {
        claims.push_back(Json{{"claim", name}, {"value", std::move(value)}, {"tag", tag}});
    }
    void verdict(Verdict v)
    {
        if (v == Verdict::Inconclusive)
            exit_code = kInconclusive;
    }
};

std::pair<int, int> parse_window(const std::string& text)
{
    auto colon = text.find(':', text.find_first_not_of('-') == 0 ? 0 : 1);
    if (colon == std::string::npos)
        throw ParseError("window must look like lo:hi, got '" + text + "'");
    try {
        std::size_t a = 0, b = 0;
        std::string l = text.substr(0, colon), h = text.substr(colon + 1);
        int lo = std::stoi(l, &a), hi = std::stoi(h, &b);
        if (a != l.size() || b != h.size())
            throw ParseError("window must look like lo:hi, got '" + text + "'");
        if (lo > hi)
            throw DomainError("window " + text + " is empty");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw ParseError("window must look like lo:hi, got '" + text + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("window bound out of range in '" + text + "'");
    }
}

int parse_int(const std::string& text, const std::string& what)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used == text.size())
            return v;
    } catch (const std::exception&) {
    }
    throw ParseError(what + " must be an integer, got '" + text + "'");
}

void require_positive(int v, const std::string& what)
{
    if (v <= 0)
        throw DomainError(what + " must be positive");
}

// Every mutable setting the subcommands read.
struct Options {
    std::string group = "A1";
    std::string mult = "0";
    std::string mult_hi;
    int max_deg = -1;
    int steps = 5;
    long nb = 1;
    std::string apply;
    int hyperplane = 0;
    std::string window;
    std::string elem;
    int order = 10;
    int qorder = -1;
    std::string series;
    std::string member;
    long prime = 2;
    std::string assign;
    std::string form = "product";
    int n = 1;
    std::string suite;
    std::string format = "json";
    long seed = 0;
    bool json = false;
};

int degree_bound(const Options& o, const ReflectionGroup& g)
{
    if (o.max_deg < 0)
        return default_max_degree(g);
    return o.max_deg;
}

int q_order(const Options& o)
{
    if (o.qorder < 0)
        return default_q_order();
    require_positive(o.qorder, "--qorder");
    return o.qorder;
}

Json group_context(const ReflectionGroup& g, const Multiplicity& m, int d)
{
    return Json{{"group", g.spec()}, {"multiplicity", m.to_string()}, {"max_degree", d}};
}

Report cmd_group(const Options& o)
{
    Report r;
    auto g = parse_group(o.group);
    r.payload = to_json(g);
    r.claim("order", g.order(), "derived");
    r.claim("hyperplanes", static_cast<int>(g.hyperplanes().size()), "derived");
    r.claim("invariant_degrees", g.invariant_degrees(), "derived");
    return r;
}

Report cmd_basis(const Options& o)
{
    Report r;
    auto g = parse_group(o.group);
    auto m = parse_multiplicity(g, o.mult);
    int d = degree_bound(o, g);
    r.payload = group_context(g, m, d);
    if (!m.integral()) {
        auto b = cw_valued_basis(m.values.at(0).at(0), d);
        r.payload["cw_valued"] = to_json(b);
        r.claim("dims", dims_json(b.dims()), "derived");
        return r;
    }
    auto b = quasi_basis(g, m, d);
    r.payload["basis"] = to_json(b);
    r.claim("dims", dims_json(b.dims()), g.spec() == "A1" ? "paper" : "derived");
    return r;
}

Report cmd_hilbert(const Options& o)
{
    Report r;
    auto g = parse_group(o.group);
    auto m = parse_multiplicity(g, o.mult);
    int d = degree_bound(o, g);
    auto h = hilbert(g, m, d);
    r.payload = group_context(g, m, d);
    r.payload["hilbert"] = to_json(h);
    r.payload["dims"] = dims_json(h.expand(d));
    r.claim("numerator", h.numerator_string(), g.spec() == "A1" ? "paper" : "derived");
    r.claim("denominator", h.denominator_string(), "trivial");
    r.claim("numerator_at_one", to_json(h.numerator_at_one()), "paper");
    return r;
}

Report cmd_freeness(const Options& o)
{
    Report r;
    auto g = parse_group(o.group);
    auto m = parse_multiplicity(g, o.mult);
    int d = degree_bound(o, g);
    auto c = freeness_certificate(g, m, d);
    r.payload = group_context(g, m, d);
    r.payload["certificate"] = to_json(c);
    r.claim("status", c.status, g.is_coxeter() ? "paper" : "derived");
    r.claim("rank", static_cast<int>(c.generators.size()), g.is_coxeter() ? "paper" : "derived");
    if (c.status == "inconclusive")
        r.exit_code = kInconclusive;
    if (c.status == "free" && g.is_coxeter()) {
        auto gs = gorenstein_shift(g, m, d);
        r.payload["gorenstein"] = to_json(gs);
        r.claim("gorenstein_shift", gs.shift, "derived");
        r.claim("expected_shift", gs.expected, "paper");
    } else {
        r.payload["gorenstein"] = "none";
    }
    return r;
}

Report cmd_filtration(const Options& o)
{
    Report r;
    auto g = parse_group(o.group);
    auto lower = parse_multiplicity(g, o.mult);
    auto upper = parse_multiplicity(g, o.mult_hi.empty() ? o.mult : o.mult_hi);
    int d = degree_bound(o, g);
    auto f = filtration_check(g, lower, upper, d);
    r.payload = Json{{"group", g.spec()},
                     {"lower", lower.to_string()},
                     {"upper", upper.to_string()},
                     {"max_degree", d},
                     {"filtration", to_json(f)}};
    r.claim("contained", f.contained, "paper");
    return r;
}

Report cmd_tower(const Options& o)
{
    Report r;
    require_positive(o.steps, "--steps");
    int d = o.max_deg < 0 ? 20 : o.max_deg;
    auto t = ganea_tower(o.steps, d);
    r.payload = Json{{"steps", o.steps}, {"max_degree", d}, {"tower", to_json(t)}};
    r.claim("all_match", t.all_match, "paper");
    return r;
}

Report cmd_x1(const Options& o)
{
    Report r;
    auto g = parse_group(o.group);
    int d = degree_bound(o, g);
    auto x = x1_algebra(g, d);
    r.payload = Json{{"group", g.spec()}, {"max_degree", d}, {"x1", to_json(x)}};
    r.claim("status", x.freeness.status, g.spec() == "A1" || g.spec() == "A1 x A1" ? "paper" : "derived");
    if (x.freeness.status == "inconclusive")
        r.exit_code = kInconclusive;
    return r;
}

Report cmd_fake_cohomology(const Options& o)
{
    Report r;
    if (o.nb < 1)
        throw DomainError("--nb must be at least 1");
    int m = parse_int(o.mult, "--mult");
    int d = o.max_deg < 0 ? 20 : o.max_deg;
    auto f = fake_cohomology_ring(o.nb, m, d);
    r.payload = Json{{"nb", o.nb}, {"m", m}, {"max_degree", d}, {"ring", to_json(f)}};
    r.claim("rational_equals_qm", f.rational_equals_qm, "paper");
    return r;
}

Report cmd_demazure(const Options& o)
{
    Report r;
    auto g = parse_group(o.group);
    auto m = parse_multiplicity(g, o.mult);
    if (o.hyperplane < 0 || o.hyperplane >= static_cast<int>(g.hyperplanes().size()))
        throw DomainError("hyperplane index out of range");
    auto p = Polynomial::parse(o.apply, g.vars());
    auto q = delta_m(g, m, o.hyperplane, p);
    r.payload = Json{{"group", g.spec()},
                     {"multiplicity", m.to_string()},
                     {"hyperplane", to_json(g.hyperplanes()[o.hyperplane].alpha)},
                     {"input", to_json(p)},
                     {"result", to_json(q)},
                     {"normalization", "(p - s p) / alpha^(2m+1), no factor 1/2"}};
    // rank-one monomials follow the divided-difference table; the rest is computed
    bool table = g.spec() == "A1" && p.terms().size() == 1;
    r.claim("result", q.to_string(), table ? "paper" : "derived");
    return r;
}

Report cmd_exp(const std::string& mode, const Options& o)
{
    Report r;
    int m = parse_int(o.mult, "--mult");
    auto [lo, hi] = parse_window(o.window.empty() ? "-8:8" : o.window);
    if (mode == "basis") {
        auto b = exp_basis(m, lo, hi);
        r.payload = to_json(b);
        r.claim("size", static_cast<int>(b.elements.size()), "derived");
        return r;
    }
    if (o.elem.empty())
        throw ParseError("exp member needs --elem");
    auto f = LaurentElement::parse(o.elem);
    auto res = exp_member(m, f, lo, hi);
    r.payload = Json{{"m", m}, {"window", Json::array({lo, hi})}, {"element", to_json(f)}, {"membership", to_json(res)}};
    r.claim("rational", to_json(res.rational), "derived");
    r.claim("integral", to_json(res.integral), "derived");
    r.verdict(res.rational);
    r.verdict(res.integral);
    return r;
}

Report cmd_chern(const Options& o)
{
    Report r;
    int m = parse_int(o.mult, "--mult");
    require_positive(o.order, "--order");
    if (o.elem.empty())
        throw ParseError("chern needs --elem");
    auto f = LaurentElement::parse(o.elem);
    auto c = chern_character(m, f, o.order);
    r.payload = Json{{"m", m}, {"order", o.order}, {"element", to_json(f)}, {"chern", to_json(c)}};
    r.claim("odd_valuation", c.odd_valuation, "derived");
    r.verdict(c.in_completed_qm);
    return r;
}

Report cmd_fake(const std::string& mode, const Options& o)
{
    Report r;
    if (mode == "nb") {
        auto res = n_b(parse_assignments(o.assign));
        r.payload = Json{{"assignments", o.assign}, {"result", to_json(res)}};
        r.claim("nb", to_json(res.nb), "trivial");
        return r;
    }
    int m = parse_int(o.mult, "--mult");
    if (mode == "distinguish") {
        if (o.nb == 0)
            throw DomainError("--nb must be nonzero");
        IntSeries p;
        p.coeffs = {0, 0, Integer(o.nb)};
        auto d = distinguishing_invariant(qmb(p, m, 3), o.prime);
        r.payload = Json{{"nb", o.nb}, {"m", m}, {"invariant", to_json(d)}};
        r.claim("rank", d.rank, "paper");
        r.claim("generator", d.generator, "paper");
        return r;
    }
    int order = o.order;
    auto p = IntSeries::parse(o.series);
    auto ring = qmb(p.truncated(order), m, order);
    r.payload = Json{{"generator", to_json(p.truncated(order))}, {"m", m}, {"order", order}, {"nb", to_json(ring.nb())}};
    // Recursion identity: P^j is a member for j >= m, 1 always.
    IntSeries one;
    one.coeffs.assign(order, 0);
    one.coeffs[0] = 1;
    r.payload["contains_one"] = to_json(ring.member(one));
    r.payload["contains_generator_power"] = to_json(ring.member(p.truncated(order).pow(m)));
    if (!o.member.empty()) {
        auto f = IntSeries::parse(o.member);
        Verdict v = ring.member(f);
        r.payload["element"] = to_json(f);
        r.payload["membership"] = to_json(v);
        r.claim("membership", to_json(v), "derived");
        r.verdict(v);
    }
    return r;
}

Report cmd_elliptic(const std::string& mode, const Options& o)
{
    Report r;
    int n = q_order(o);
    if (mode == "theta") {
        auto [lo, hi] = parse_window(o.window.empty() ? "-12:12" : o.window);
        auto f = parse_theta_form(o.form);
        auto t = theta(f, lo, hi, n);
        auto cert = check_recurrence(t.series, -1, 0, 2);
        auto other = theta(f == ThetaForm::Sum ? ThetaForm::Product : ThetaForm::Sum, lo, hi, n);
        bool agree = t.series.agrees_with(other.series);
        r.payload = Json{{"form", o.form},
                         {"q_order", n},
                         {"window", Json::array({lo, hi})},
                         {"theta", to_json(t)},
                         {"quasi_periodicity", to_json(cert)},
                         {"sum_equals_product", agree}};
        r.claim("sum_equals_product", agree, "paper");
        r.verdict(cert.verdict);
        return r;
    }
    if (mode == "sections") {
        auto s = section_basis(o.n, n);
        Json certs = Json::array();
        for (const auto& b : s.basis) {
            auto c = check_functional_equation(b.series, o.n);
            certs.push_back(to_json(c));
            r.verdict(c.verdict);
        }
        r.payload = to_json(s);
        r.payload["certificates"] = certs;
        r.claim("dimension", s.dimension(), "derived");
        return r;
    }
    if (mode == "elldim") {
        int m = parse_int(o.mult, "--mult");
        auto g = ell_graded_dimension(m, o.n, n);
        r.payload = to_json(g);
        r.payload["q_order"] = n;
        r.claim("dimension", g.formula, "derived");
        return r;
    }
    int m = parse_int(o.mult, "--mult");
    auto d = ell_sheaf_dims(m);
    r.payload = to_json(d);
    r.claim("h0", d.h0, "paper");
    r.claim("h1", d.h1, "paper");
    return r;
}

Report cmd_replay(const Options& o)
{
    Report r;
    auto res = replay(o.suite);
    r.payload = to_json(res);
    r.claim("all_pass", res.all_pass(), "paper");
    if (!res.all_pass())
        r.exit_code = kReplayFailed;
    return r;
}

void print_table(const Json& j, const std::string& prefix, std::ostream& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            print_table(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i)
            print_table(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quasi-invariants of reflection groups and related computations", "quasinv"};
    app.require_subcommand(1);
    app.set_version_flag("--version", QUASINV_VERSION);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", o.seed, "Seed recorded for randomized checks");

    std::function<Report()> action;
    std::string path;
    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "Emit JSON (the default)");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    };
    auto leaf = [&](CLI::App* sub, std::string name, std::function<Report()> f) {
        common(sub);
        sub->callback([&, name, f] {
            path = name;
            action = f;
        });
    };

    auto* grp = app.add_subcommand("group", "Dump a reflection group");
    grp->add_option("--spec,--group", o.group, "Group spec, e.g. \"I2(4)\" or \"A1 x A1\"")->required();
    leaf(grp, "group", [&] { return cmd_group(o); });

    for (std::string name : {"basis", "hilbert", "freeness", "filtration"}) {
        auto* sub = app.add_subcommand(name, "Quasi-invariants: " + name);
        sub->add_option("--group", o.group, "Group spec")->required();
        sub->add_option("--mult", o.mult, "Multiplicity: m or orbit:value,...");
        sub->add_option("--max-deg", o.max_deg, "Degree bound D (default 4 * sum of invariant degrees)")->check(CLI::NonNegativeNumber);
        if (name == "filtration")
            sub->add_option("--mult-hi", o.mult_hi, "Larger multiplicity");
        std::function<Report()> f = name == "basis"      ? std::function<Report()>([&] { return cmd_basis(o); })
                                    : name == "hilbert"  ? std::function<Report()>([&] { return cmd_hilbert(o); })
                                    : name == "freeness" ? std::function<Report()>([&] { return cmd_freeness(o); })
                                                         : std::function<Report()>([&] { return cmd_filtration(o); });
        leaf(sub, name, f);
    }

    auto* tow = app.add_subcommand("tower", "Rank-one fibre-cofibre tower");
    tow->add_option("--steps", o.steps, "Number of steps")->check(CLI::NonNegativeNumber);
    tow->add_option("--max-deg", o.max_deg, "Degree bound (default 20)")->check(CLI::NonNegativeNumber);
    leaf(tow, "tower", [&] { return cmd_tower(o); });

    auto* x1 = app.add_subcommand("x1", "The algebra Q + <invariants of positive degree>");
    x1->add_option("--group", o.group, "Group spec")->required();
    x1->add_option("--max-deg", o.max_deg, "Degree bound")->check(CLI::NonNegativeNumber);
    leaf(x1, "x1", [&] { return cmd_x1(o); });

    auto* fc = app.add_subcommand("fake-cohomology", "Rational cohomology rings Q'_m of fake spaces");
    fc->add_option("--nb", o.nb, "N_B")->required()->check(CLI::PositiveNumber);
    fc->add_option("--mult", o.mult, "m")->required();
    fc->add_option("--max-deg", o.max_deg, "Degree bound (default 20)")->check(CLI::NonNegativeNumber);
    leaf(fc, "fake-cohomology", [&] { return cmd_fake_cohomology(o); });

    auto* dem = app.add_subcommand("demazure", "Generalized divided difference");
    dem->add_option("--group", o.group, "Coxeter group spec")->required();
    dem->add_option("--mult", o.mult, "Multiplicity")->required();
    dem->add_option("--apply", o.apply, "Polynomial in Q_m")->required();
    dem->add_option("--hyperplane", o.hyperplane, "Hyperplane index (default 0)")->check(CLI::NonNegativeNumber);
    leaf(dem, "demazure", [&] { return cmd_demazure(o); });

    auto* exp = app.add_subcommand("exp", "Exponential quasi-invariants in rank one");
    exp->require_subcommand(1);
    for (std::string mode : {"basis", "member"}) {
        auto* sub = exp->add_subcommand(mode, "exp " + mode);
        sub->add_option("--mult", o.mult, "m")->required();
        sub->add_option("--window", o.window, "z-exponent window lo:hi (default -8:8)");
        if (mode == "member")
            sub->add_option("--elem", o.elem, "Laurent element, e.g. \"z - 2 + z^-1\"")->required();
        leaf(sub, "exp " + mode, [&, mode] { return cmd_exp(mode, o); });
    }

    auto* ch = app.add_subcommand("chern", "Chern character of an exponential quasi-invariant");
    ch->add_option("--mult", o.mult, "m")->required();
    ch->add_option("--order", o.order, "Truncation order in x")->check(CLI::PositiveNumber);
    ch->add_option("--elem", o.elem, "Laurent element")->required();
    leaf(ch, "chern", [&] { return cmd_chern(o); });

    auto* fake = app.add_subcommand("fake", "K-theory of fake spaces");
    fake->require_subcommand(1);
    auto* fk = fake->add_subcommand("ktheory", "Membership in Q_m(B)");
    fk->add_option("--series", o.series, "Coefficients of P, e.g. \"0,0,3,1\"")->required();
    fk->add_option("--mult", o.mult, "m")->required();
    fk->add_option("--order", o.order, "Truncation order D")->required()->check(CLI::PositiveNumber);
    fk->add_option("--member", o.member, "Coefficients of an element to test");
    leaf(fk, "fake ktheory", [&] { return cmd_fake("ktheory", o); });
    auto* fd = fake->add_subcommand("distinguish", "Image of Q_m(B) in (Z/p)[t]/(t^3)");
    fd->add_option("--nb", o.nb, "N_B")->required()->check(CLI::PositiveNumber);
    fd->add_option("--mult", o.mult, "m")->required();
    fd->add_option("--prime", o.prime, "p")->required()->check(CLI::PositiveNumber);
    leaf(fd, "fake distinguish", [&] { return cmd_fake("distinguish", o); });
    auto* fn = fake->add_subcommand("nb", "N_B and Rector invariants");
    fn->add_option("--assign", o.assign, "Assignments p:n_p, e.g. \"3:2,5:3\"");
    leaf(fn, "fake nb", [&] { return cmd_fake("nb", o); });

    auto* ell = app.add_subcommand("elliptic", "Theta functions and elliptic sections");
    ell->require_subcommand(1);
    auto* et = ell->add_subcommand("theta", "Theta function");
    et->add_option("--form", o.form, "sum or product");
    et->add_option("--qorder", o.qorder, "q-truncation N (default 12 or QUASINV_DEFAULT_QORDER)")->check(CLI::PositiveNumber);
    et->add_option("--window", o.window, "z-window lo:hi (default -12:12)");
    leaf(et, "elliptic theta", [&] { return cmd_elliptic("theta", o); });
    auto* es = ell->add_subcommand("sections", "Sections of L^n");
    es->add_option("--n", o.n, "Degree")->required()->check(CLI::NonNegativeNumber);
    es->add_option("--qorder", o.qorder, "q-truncation N")->check(CLI::PositiveNumber);
    leaf(es, "elliptic sections", [&] { return cmd_elliptic("sections", o); });
    auto* ed = ell->add_subcommand("elldim", "Graded dimension of twisted elliptic cohomology");
    ed->add_option("--mult", o.mult, "m")->required();
    ed->add_option("--n", o.n, "Degree")->required()->check(CLI::NonNegativeNumber);
    ed->add_option("--qorder", o.qorder, "q-truncation N")->check(CLI::PositiveNumber);
    leaf(ed, "elliptic elldim", [&] { return cmd_elliptic("elldim", o); });
    auto* eh = ell->add_subcommand("sheafdims", "Sheaf cohomology dimensions");
    eh->add_option("--mult", o.mult, "m")->required();
    leaf(eh, "elliptic sheafdims", [&] { return cmd_elliptic("sheafdims", o); });

    auto* rep = app.add_subcommand("replay", "Replay a suite of checks");
    rep->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(replay_suites()));
    leaf(rep, "replay", [&] { return cmd_replay(o); });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << QUASINV_VERSION << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kParse;
    }

    Report report;
    try {
        report = action();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    } catch (const Inconclusive& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    }

    Json env{{"tool", "quasinv"}, {"version", QUASINV_VERSION}, {"command", path}, {"args", args}};
    env["claims"] = report.claims;
    env["payload"] = report.payload;
    if (o.format == "table")
        print_table(env, "", out);
    else
        out << env.dump(2) << "\n";
    return report.exit_code;
}

} // namespace quasinv::cli
