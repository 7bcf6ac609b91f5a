#pragma once

#include "quasinv/rational.hpp"

#include <string>
#include <vector>

namespace quasinv {

// Element of Q(zeta_n) stored by coordinates in the power basis
// 1, zeta, ..., zeta^(phi(n)-1), reduced modulo the n-th cyclotomic polynomial.
// Order 1 is Q itself; order 2 is normalized to order 1.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coords_(1) {}
    Cyclotomic(long v) : order_(1), coords_{Rational(v)} {}
    Cyclotomic(const Rational& v) : order_(1), coords_{v} {}
    Cyclotomic(int order, std::vector<Rational> coords);

    // zeta_n^k.
    static Cyclotomic zeta(int n, long k = 1);

    int order() const { return order_; }
    const std::vector<Rational>& coords() const { return coords_; }
    int degree() const { return static_cast<int>(coords_.size()); }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const;

    // View of the same element inside Q(zeta_n); n must be a multiple of order().
    Cyclotomic embed(int n) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;
    // Image under zeta -> zeta^-1.
    Cyclotomic conj() const;

    std::string to_string() const;

    // Common field of two orders; throws FieldMismatch when neither is rational.
    static int common_order(int a, int b);

private:
    int order_;
    std::vector<Rational> coords_;
};

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);
int euler_phi(int n);

} // namespace quasinv
