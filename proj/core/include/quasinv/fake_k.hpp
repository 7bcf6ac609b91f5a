#pragma once

#include "quasinv/errors.hpp"
#include "quasinv/laurent.hpp"
#include "quasinv/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace quasinv {

// Integer power series known modulo t^order.
struct IntSeries {
    std::vector<Integer> coeffs;

    int order() const { return static_cast<int>(coeffs.size()); }
    Integer at(int k) const { return k < order() ? coeffs[k] : Integer(0); }
    // Comma-separated coefficients of t^0, t^1, ...
    static IntSeries parse(const std::string& text);
    IntSeries truncated(int n) const;
    friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator-(const IntSeries& a, const IntSeries& b);
    friend bool operator==(const IntSeries& a, const IntSeries& b) { return a.coeffs == b.coeffs; }
    IntSeries pow(int e) const;
    std::string to_string() const;
};

bool is_prime(long p);

// (k/p) for p prime not dividing k; at p = 2 it is 1 iff k = +-1 mod 8.
int legendre(const Integer& k, long p);

struct NBResult {
    Integer nb;
    std::map<long, int> rector;  // p -> (B/p) = legendre(n_p, p)
};
// Assignments p -> n_p with p prime, p not dividing n_p, and n_2 = 1 mod 4.
NBResult n_b(const std::map<long, Integer>& assignments);
// "3:2,5:3" -> {3: 2, 5: 3}.
std::map<long, Integer> parse_assignments(const std::string& text);

// Q_m(B) = Z + Z P + ... + Z P^(m-1) + P^m Z[[t]] inside Z[[t]], P = N_B t^2 + O(t^3).
class FakeKRing {
public:
    FakeKRing(IntSeries p, int m, int order);

    const IntSeries& generator() const { return p_; }
    int multiplicity() const { return m_; }
    int order() const { return order_; }
    Integer nb() const { return p_.coeffs[2]; }

    // Membership of f modulo t^order; inconclusive when the precision runs out.
    Verdict member(const IntSeries& f) const;

private:
    IntSeries p_;
    int m_;
    int order_;
};

FakeKRing qmb(const IntSeries& p, int m, int order);

// Image of Q_m(B) in (Z/p)[t]/(t^3).
struct DistinguishingInvariant {
    long prime = 2;
    int rank = 0;
    std::vector<std::vector<long>> basis;  // echelon rows over Z/p, coefficients of 1, t, t^2
    long generator_coeff = 0;              // the t^2 coefficient of the square-zero generator
    bool square_zero = true;
    std::string generator;
};
DistinguishingInvariant distinguishing_invariant(const FakeKRing& ring, long p);

// t^2 / (1 + t), the series of z - 2 + z^-1 at z = 1 + t.
IntSeries bg_series(int order);
// Image of an integral Laurent element under z -> 1 + t.
IntSeries laurent_to_series(const LaurentElement& f, int order);

} // namespace quasinv
