#pragma once

#include "quasinv/rational.hpp"

#include <string>
#include <vector>

namespace quasinv {

// P(t) / prod_i (1 - t^{d_i}) with integer numerator P.
struct HilbertSeries {
    std::vector<Integer> numerator;  // coefficient of t^k at index k
    std::vector<int> degrees;

    // Coefficients of the expanded series for t^0 .. t^max_degree.
    std::vector<Integer> expand(int max_degree) const;
    Integer numerator_at_one() const;
    int numerator_low() const;
    int numerator_high() const;
    bool palindromic() const;
    // a with H(1/t) = (-1)^r t^a H(t), r = number of denominator factors.
    // Needs a palindromic numerator.
    int functional_equation_shift() const;
    std::string numerator_string() const;
    std::string denominator_string() const;
};

// Numerator reconstruction from degreewise dimensions dims[0..D]. Requires
// D >= 2 * sum(degrees) and a numerator of degree < D - max(degrees); throws
// Inconclusive("degree bound too small") otherwise.
HilbertSeries hilbert_from_basis(const std::vector<long>& dims, const std::vector<int>& degrees);

// Coefficients of prod_i 1/(1 - t^{d_i}) through t^max_degree.
std::vector<Integer> invariant_series(const std::vector<int>& degrees, int max_degree);

// "1 + 2t^3 - t^5" style rendering of an integer polynomial in t.
std::string t_polynomial_string(const std::vector<Integer>& coeffs);

} // namespace quasinv
