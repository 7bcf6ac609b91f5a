#pragma once

#include "quasinv/cyclotomic.hpp"

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quasinv {

using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

// Graded order: lower total degree first; within one degree the
// lexicographically larger exponent vector first (x^2, xy, y^2).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exponent vectors of total degree d in n variables, in GrlexLess order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

// Sentinel order of vanishing for the zero polynomial.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

class Polynomial {
public:
    using Terms = std::map<Monomial, Cyclotomic, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    Polynomial(std::vector<std::string> vars, const Cyclotomic& c);

    static Polynomial variable(const std::vector<std::string>& vars, int i);
    static Polynomial monomial(const std::vector<std::string>& vars, const Monomial& e,
                               const Cyclotomic& c = Cyclotomic(1));
    // Parses sums of terms like "2*x^3 - 1/2*x*y + y^2".
    static Polynomial parse(const std::string& text, const std::vector<std::string>& vars);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Largest total degree; -1 for zero.
    int degree() const;
    int low_degree() const;
    bool is_homogeneous() const;
    // Common field order of all coefficients.
    int field_order() const;
    Cyclotomic coeff(const Monomial& e) const;
    void add_term(const Monomial& e, const Cyclotomic& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Cyclotomic& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Cyclotomic& c) { return a *= c; }
    friend Polynomial operator*(const Cyclotomic& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial pow(int e) const;
    Polynomial homogeneous_part(int d) const;

    // p(images[0], ..., images[n-1]).
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    // Quotient when q divides this exactly.
    std::optional<Polynomial> divide_exact(const Polynomial& q) const;

    std::string to_string() const;

private:
    void check_compatible(const Polynomial& o) const;

    std::vector<std::string> vars_;
    Terms terms_;
};

// Largest k with alpha^k | p. alpha must be a nonzero linear form.
int divisibility_order(const Polynomial& p, const Polynomial& alpha);

// Coefficient vector of a linear form; throws DomainError otherwise.
std::vector<Cyclotomic> linear_coefficients(const Polynomial& alpha);

// alpha scaled so its first nonzero coefficient is 1.
Polynomial normalize_linear(const Polynomial& alpha);

// Images of the variables under the change of coordinates sending alpha to
// the variable at its first nonzero position; the other variables are kept.
// Composing p with these images expresses p in the adapted coordinates.
struct AdaptedCoordinates {
    int slot = 0;
    std::vector<Polynomial> images;
};
AdaptedCoordinates adapted_coordinates(const Polynomial& alpha);

} // namespace quasinv
