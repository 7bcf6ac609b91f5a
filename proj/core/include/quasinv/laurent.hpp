#pragma once

#include "quasinv/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace quasinv {

// Finite Laurent sum in w = z^(1/2); exponents are stored in units of w so
// that z^k has exponent 2k.
class LaurentElement {
public:
    using Terms = std::map<int, Rational>;

    LaurentElement() = default;
    LaurentElement(const Rational& c);

    static LaurentElement w_power(int e, const Rational& c = Rational(1));
    static LaurentElement z_power(int k, const Rational& c = Rational(1));
    // Accepts sums of terms c*z^e with e an integer or half-integer, e.g.
    // "z - 2 + z^-1", "z^(1/2) - z^(-1/2)", "3/2*z^-3/2".
    static LaurentElement parse(const std::string& text);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_integer_exponents() const;
    bool has_integer_coefficients() const;
    // Lowest and highest w-exponent; undefined for zero.
    int low() const { return terms_.begin()->first; }
    int high() const { return terms_.rbegin()->first; }
    Rational coeff(int w) const;
    void add_term(int w, const Rational& c);

    LaurentElement operator-() const;
    LaurentElement& operator+=(const LaurentElement& o);
    LaurentElement& operator-=(const LaurentElement& o);
    friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
    friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
    friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
    friend LaurentElement operator*(LaurentElement a, const Rational& c);
    friend bool operator==(const LaurentElement& a, const LaurentElement& b) { return a.terms_ == b.terms_; }

    LaurentElement pow(int e) const;
    // Image under z -> z^-1.
    LaurentElement reflect() const;
    // Value at z = 1.
    Rational at_one() const;
    std::optional<LaurentElement> divide_exact(const LaurentElement& q) const;

    std::string to_string() const;

private:
    Terms terms_;
};

// delta = (z^(1/2) - z^(-1/2))^2 = z - 2 + z^-1.
LaurentElement laurent_delta();

} // namespace quasinv
