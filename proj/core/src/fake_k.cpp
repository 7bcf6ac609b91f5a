#include "quasinv/fake_k.hpp"

#include "quasinv/hilbert.hpp"

#include <numeric>
#include <sstream>

namespace quasinv {

IntSeries IntSeries::parse(const std::string& text)
{
    IntSeries s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw ParseError("empty coefficient in series '" + text + "'");
        Rational r = Rational::parse(item.substr(b, e - b + 1));
        if (!r.is_integer())
            throw ParseError("series coefficients must be integers");
        s.coeffs.push_back(r.num());
    }
    if (s.coeffs.empty())
        throw ParseError("empty series");
    return s;
}

IntSeries IntSeries::truncated(int n) const
{
    IntSeries r;
    for (int k = 0; k < n; ++k)
        r.coeffs.push_back(at(k));
    return r;
}

IntSeries operator*(const IntSeries& a, const IntSeries& b)
{
    int n = std::min(a.order(), b.order());
    IntSeries r;
    r.coeffs.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        if (a.coeffs[i] == 0)
            continue;
        for (int j = 0; i + j < n; ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;
}

IntSeries operator+(const IntSeries& a, const IntSeries& b)
{
    int n = std::min(a.order(), b.order());
    IntSeries r;
    for (int k = 0; k < n; ++k)
        r.coeffs.push_back(a.coeffs[k] + b.coeffs[k]);
    return r;
}

IntSeries operator-(const IntSeries& a, const IntSeries& b)
{
    int n = std::min(a.order(), b.order());
    IntSeries r;
    for (int k = 0; k < n; ++k)
        r.coeffs.push_back(a.coeffs[k] - b.coeffs[k]);
    return r;
}

IntSeries IntSeries::pow(int e) const
{
    IntSeries r;
    r.coeffs.assign(order(), 0);
    if (order() > 0)
        r.coeffs[0] = 1;
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

std::string IntSeries::to_string() const
{
    return t_polynomial_string(coeffs) + " + O(t^" + std::to_string(order()) + ")";
}

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

int legendre(const Integer& k, long p)
{
    if (!is_prime(p))
        throw DomainError(std::to_string(p) + " is not prime");
    Integer r = k % p;
    if (r < 0)
        r += p;
    if (r == 0)
        throw DomainError("legendre symbol undefined: p divides k");
    if (p == 2) {
        Integer r8 = k % 8;
        if (r8 < 0)
            r8 += 8;
        return (r8 == 1 || r8 == 7) ? 1 : -1;
    }
    Integer e;
    mpz_powm_ui(e.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), Integer(p).get_mpz_t());
    return e == 1 ? 1 : -1;
}

NBResult n_b(const std::map<long, Integer>& assignments)
{
    NBResult res;
    res.nb = 1;
    for (const auto& [p, n] : assignments) {
        if (!is_prime(p))
            throw DomainError(std::to_string(p) + " is not prime");
        if (n == 0)
            throw DomainError("n_p must be nonzero");
        if (n % p == 0)
            throw DomainError("n_" + std::to_string(p) + " must be prime to " + std::to_string(p));
        if (p == 2) {
            Integer r = n % 4;
            if (r < 0)
                r += 4;
            if (r != 1)
                throw DomainError("n_2 must be 1 mod 4");
        }
        Integer a = n < 0 ? Integer(-n) : n;
        mpz_lcm(res.nb.get_mpz_t(), res.nb.get_mpz_t(), a.get_mpz_t());
        res.rector[p] = legendre(n, p);
    }
    return res;
}

std::map<long, Integer> parse_assignments(const std::string& text)
{
    std::map<long, Integer> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("assignment '" + item + "' lacks ':'");
        Rational p = Rational::parse(item.substr(0, colon));
        Rational n = Rational::parse(item.substr(colon + 1));
        if (!p.is_integer() || !n.is_integer())
            throw ParseError("assignments must be integers");
        long pl = p.num().get_si();
        if (out.count(pl))
            throw ParseError("prime " + std::to_string(pl) + " assigned twice");
        out[pl] = n.num();
    }
    return out;
}

FakeKRing::FakeKRing(IntSeries p, int m, int order) : p_(std::move(p)), m_(m), order_(order)
{
    if (m < 0)
        throw DomainError("m must be non-negative");
    if (order < 3)
        throw DomainError("order must be at least 3");
    if (p_.order() < 3 || p_.coeffs[0] != 0 || p_.coeffs[1] != 0 || p_.coeffs[2] == 0)
        throw DomainError("generator must have the form N_B t^2 + O(t^3) with N_B != 0");
}

Verdict FakeKRing::member(const IntSeries& f) const
{
    int prec = std::min(order_, f.order());
    std::vector<Integer> cur(f.coeffs.begin(), f.coeffs.begin() + prec);
    const Integer& u0 = p_.coeffs[2];
    for (int level = m_; level >= 1; --level) {
        if (prec < 3)
            return Verdict::Inconclusive;
        if (cur[1] != 0)
            return Verdict::False;
        // (cur - cur_0) / P over Z, one coefficient at a time.
        int n = prec - 2;
        std::vector<Integer> g(n);
        for (int k = 0; k < n; ++k) {
            Integer s = cur[k + 2];
            for (int i = 1; i <= k; ++i)
                s -= p_.at(i + 2) * g[k - i];
            if (s % u0 != 0)
                return Verdict::False;
            g[k] = s / u0;
        }
        cur = std::move(g);
        prec = n;
    }
    return Verdict::True;
}

FakeKRing qmb(const IntSeries& p, int m, int order)
{
    return FakeKRing(p, m, order);
}

static long mod_p(const Integer& v, long p)
{
    Integer r = v % p;
    if (r < 0)
        r += p;
    return r.get_si();
}

static long inv_mod(long a, long p)
{
    long r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

DistinguishingInvariant distinguishing_invariant(const FakeKRing& ring, long p)
{
    if (!is_prime(p))
        throw DomainError(std::to_string(p) + " is not prime");
    IntSeries P = ring.generator().truncated(3);
    std::vector<IntSeries> span;
    for (int k = 0; k < 3; ++k) {
        IntSeries e;
        e.coeffs.assign(3, 0);
        e.coeffs[k] = 1;
        span.push_back(e);
    }
    IntSeries one;
    one.coeffs = {1, 0, 0};
    for (int j = 1; j <= ring.multiplicity(); ++j) {
        std::vector<IntSeries> next{one};
        for (const auto& s : span)
            next.push_back(P * s);
        span = std::move(next);
    }
    std::vector<std::vector<long>> rows;
    for (const auto& s : span) {
        std::vector<long> v(3);
        for (int k = 0; k < 3; ++k)
            v[k] = mod_p(s.at(k), p);
        for (const auto& r : rows) {
            int piv = 0;
            while (r[piv] == 0)
                ++piv;
            long f = v[piv];
            for (int k = 0; k < 3; ++k)
                v[k] = ((v[k] - f * r[k]) % p + p) % p;
        }
        int piv = 0;
        while (piv < 3 && v[piv] == 0)
            ++piv;
        if (piv == 3)
            continue;
        long inv = inv_mod(v[piv], p);
        for (auto& x : v)
            x = x * inv % p;
        for (auto& r : rows) {
            long f = r[piv];
            for (int k = 0; k < 3; ++k)
                r[k] = ((r[k] - f * v[k]) % p + p) % p;
        }
        rows.push_back(v);
    }
    DistinguishingInvariant d;
    d.prime = p;
    d.rank = static_cast<int>(rows.size());
    d.basis = rows;
    d.generator_coeff = mod_p(ring.nb(), p);
    IntSeries g;
    g.coeffs = {0, 0, Integer(d.generator_coeff)};
    IntSeries sq = g * g;
    d.square_zero = true;
    for (const auto& c : sq.coeffs)
        if (c % p != 0)
            d.square_zero = false;
    d.generator = d.generator_coeff == 0 ? "0" : (d.generator_coeff == 1 ? "t^2" : std::to_string(d.generator_coeff) + "t^2");
    return d;
}

IntSeries bg_series(int order)
{
    if (order < 1)
        throw DomainError("order must be positive");
    IntSeries s;
    s.coeffs.assign(order, 0);
    for (int k = 2; k < order; ++k)
        s.coeffs[k] = k % 2 == 0 ? 1 : -1;
    return s;
}

IntSeries laurent_to_series(const LaurentElement& f, int order)
{
    if (!f.has_integer_exponents() || !f.has_integer_coefficients())
        throw DomainError("z -> 1 + t needs integer exponents and coefficients");
    IntSeries one_plus_t, inv;
    one_plus_t.coeffs.assign(order, 0);
    inv.coeffs.assign(order, 0);
    one_plus_t.coeffs[0] = 1;
    if (order > 1)
        one_plus_t.coeffs[1] = 1;
    for (int k = 0; k < order; ++k)
        inv.coeffs[k] = k % 2 == 0 ? 1 : -1;
    IntSeries r;
    r.coeffs.assign(order, 0);
    for (const auto& [w, c] : f.terms()) {
        int k = w / 2;
        IntSeries t = (k >= 0 ? one_plus_t : inv).pow(k >= 0 ? k : -k);
        for (int i = 0; i < order; ++i)
            r.coeffs[i] += c.num() * t.coeffs[i];
    }
    return r;
}

} // namespace quasinv
