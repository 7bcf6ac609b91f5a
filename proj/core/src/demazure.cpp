#include "quasinv/demazure.hpp"

#include "quasinv/quasi_invariants.hpp"

namespace quasinv {

static const Hyperplane& coxeter_hyperplane(const ReflectionGroup& g, int h)
{
    if (!g.is_coxeter())
        throw DomainError("divided differences need a Coxeter group");
    if (h < 0 || h >= static_cast<int>(g.hyperplanes().size()))
        throw DomainError("no hyperplane with index " + std::to_string(h));
    return g.hyperplanes()[h];
}

Polynomial delta_classical(const ReflectionGroup& g, int h, const Polynomial& p)
{
    const Hyperplane& hp = coxeter_hyperplane(g, h);
    Polynomial d = p - g.act(hp.elements[1], p);
    auto q = d.divide_exact(hp.alpha);
    if (!q)
        throw std::logic_error("p - s(p) not divisible by alpha");
    return *q;
}

Polynomial delta_m(const ReflectionGroup& g, const Multiplicity& m, int h, const Polynomial& p)
{
    const Hyperplane& hp = coxeter_hyperplane(g, h);
    if (!m.integral())
        throw DomainError("delta_m needs integer multiplicities");
    if (!is_quasi_invariant(g, m, p))
        throw DomainError("argument is not quasi-invariant of multiplicity " + m.to_string());
    long mh = m.at(hp.orbit, 1).num().get_si();
    Polynomial d = p - g.act(hp.elements[1], p);
    auto q = d.divide_exact(hp.alpha.pow(static_cast<int>(2 * mh + 1)));
    if (!q)
        throw std::logic_error("quasi-invariant without the expected divisibility");
    return *q;
}

LaurentElement lambda(const LaurentElement& f)
{
    if (!f.has_integer_exponents())
        throw DomainError("lambda needs integer z-exponents");
    LaurentElement num = f - f.reflect();
    if (num.is_zero())
        return num;
    LaurentElement den = LaurentElement(Rational(1)) - LaurentElement::z_power(2);
    auto q = num.divide_exact(den);
    if (!q)
        throw std::logic_error("f - s(f) not divisible by 1 - z^2");
    return *q;
}

int exp_quasi_order(const LaurentElement& f)
{
    LaurentElement l = lambda(f);
    if (l.is_zero())
        return kInfiniteOrder;
    LaurentElement step = LaurentElement(Rational(1)) - LaurentElement::z_power(1);
    int k = 0;
    while (true) {
        auto q = l.divide_exact(step);
        if (!q)
            return k;
        l = *q;
        ++k;
    }
}

bool is_exp_quasi_invariant(int m, const LaurentElement& f)
{
    if (m < 0)
        throw DomainError("m must be non-negative");
    int k = exp_quasi_order(f);
    return k == kInfiniteOrder || k >= 2 * m;
}

ExpBasis exp_basis(int m, int lo, int hi)
{
    if (m < 0)
        throw DomainError("m must be non-negative");
    if (lo > -1 || hi < 1)
        throw DomainError("window too small: it must contain -1..1");
    ExpBasis b;
    b.m = m;
    b.lo = lo;
    b.hi = hi;
    LaurentElement delta = laurent_delta();
    for (int j = 0; j < m; ++j) {
        b.elements.push_back(delta.pow(j));
        b.labels.push_back(j == 0 ? "1" : "delta^" + std::to_string(j));
    }
    LaurentElement dm = delta.pow(m);
    for (int k = lo; k <= hi; ++k) {
        b.elements.push_back(dm * LaurentElement::z_power(k));
        std::string z = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
        std::string d = m == 0 ? "" : (m == 1 ? "delta" : "delta^" + std::to_string(m));
        b.labels.push_back(d.empty() ? (z.empty() ? "1" : z) : (z.empty() ? d : d + "*" + z));
    }
    return b;
}

ExpMembership exp_member(int m, const LaurentElement& f, int lo, int hi)
{
    if (m < 0)
        throw DomainError("m must be non-negative");
    ExpMembership r;
    if (!f.has_integer_exponents())
        return r;
    LaurentElement delta = laurent_delta();
    LaurentElement cur = f;
    bool integral = true;
    for (int j = 0; j < m; ++j) {
        Rational c = cur.at_one();
        r.leading.push_back(c);
        integral = integral && c.is_integer();
        auto q = (cur - LaurentElement(c)).divide_exact(delta);
        if (!q)
            return r;
        cur = *q;
    }
    r.decomposed = true;
    r.tail = cur;
    r.rational = Verdict::True;
    integral = integral && cur.has_integer_coefficients();
    r.integral = integral ? Verdict::True : Verdict::False;
    r.tail_in_window = cur.is_zero() || (cur.low() >= 2 * lo && cur.high() <= 2 * hi);
    return r;
}

TruncatedExpSeries operator*(const TruncatedExpSeries& a, const TruncatedExpSeries& b)
{
    int n = std::min(a.order(), b.order());
    TruncatedExpSeries r{std::vector<Rational>(n)};
    for (int i = 0; i < n; ++i) {
        if (a.coeffs[i].is_zero())
            continue;
        for (int j = 0; i + j < n; ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;
}

int TruncatedExpSeries::odd_valuation() const
{
    for (int i = 1; i < order(); i += 2)
        if (!coeffs[i].is_zero())
            return i;
    return -1;
}

std::string TruncatedExpSeries::to_string() const
{
    std::string out;
    for (int i = 0; i < order(); ++i) {
        const Rational& c = coeffs[i];
        if (c.is_zero())
            continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        bool neg = c.sign() < 0;
        std::string mag = (neg ? -c : c).to_string();
        std::string term = mono.empty() ? mag : (mag == "1" ? mono : mag + "*" + mono);
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return (out.empty() ? "0" : out) + " + O(x^" + std::to_string(order()) + ")";
}

TruncatedExpSeries exp_substitute(const LaurentElement& f, int order)
{
    if (order < 1)
        throw DomainError("order must be positive");
    TruncatedExpSeries s{std::vector<Rational>(order)};
    for (const auto& [w, c] : f.terms()) {
        Rational rate(w, 2);
        Rational term = c;
        for (int n = 0; n < order; ++n) {
            s.coeffs[n] += term;
            term = term * rate / Rational(n + 1);
        }
    }
    return s;
}

ChernResult chern_character(int m, const LaurentElement& f, int order)
{
    if (!is_exp_quasi_invariant(m, f))
        throw DomainError("argument is not an exponential quasi-invariant of multiplicity " + std::to_string(m));
    ChernResult r;
    r.series = exp_substitute(f, order);
    r.odd_valuation = r.series.odd_valuation();
    if (r.odd_valuation >= 0)
        r.in_completed_qm = r.odd_valuation >= 2 * m + 1 ? Verdict::True : Verdict::False;
    else
        r.in_completed_qm = order >= 2 * m + 1 ? Verdict::True : Verdict::Inconclusive;
    return r;
}

} // namespace quasinv
