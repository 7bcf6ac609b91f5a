#include "quasinv/hilbert.hpp"

#include "quasinv/errors.hpp"

#include <algorithm>
#include <numeric>

namespace quasinv {

std::vector<Integer> invariant_series(const std::vector<int>& degrees, int max_degree)
{
    std::vector<Integer> s(max_degree + 1, 0);
    s[0] = 1;
    for (int d : degrees)
        for (int k = d; k <= max_degree; ++k)
            s[k] += s[k - d];
    return s;
}

std::vector<Integer> HilbertSeries::expand(int max_degree) const
{
    std::vector<Integer> inv = invariant_series(degrees, max_degree);
    std::vector<Integer> out(max_degree + 1, 0);
    for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= max_degree; ++i)
        if (numerator[i] != 0)
            for (int k = static_cast<int>(i); k <= max_degree; ++k)
                out[k] += numerator[i] * inv[k - i];
    return out;
}

Integer HilbertSeries::numerator_at_one() const
{
    return std::accumulate(numerator.begin(), numerator.end(), Integer(0));
}

int HilbertSeries::numerator_low() const
{
    for (std::size_t i = 0; i < numerator.size(); ++i)
        if (numerator[i] != 0)
            return static_cast<int>(i);
    return -1;
}

int HilbertSeries::numerator_high() const
{
    for (std::size_t i = numerator.size(); i-- > 0;)
        if (numerator[i] != 0)
            return static_cast<int>(i);
    return -1;
}

bool HilbertSeries::palindromic() const
{
    int lo = numerator_low(), hi = numerator_high();
    if (lo < 0)
        return false;
    for (int i = lo; i <= hi; ++i)
        if (numerator[i] != numerator[lo + hi - i])
            return false;
    return true;
}

int HilbertSeries::functional_equation_shift() const
{
    if (!palindromic())
        throw DomainError("numerator is not palindromic");
    int sum_d = std::accumulate(degrees.begin(), degrees.end(), 0);
    return sum_d - (numerator_low() + numerator_high());
}

std::string t_polynomial_string(const std::vector<Integer>& coeffs)
{
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Integer& c = coeffs[k];
        if (c == 0)
            continue;
        bool neg = c < 0;
        Integer mag = neg ? Integer(-c) : c;
        std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        std::string term = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + mono);
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

std::string HilbertSeries::numerator_string() const
{
    return t_polynomial_string(numerator);
}

std::string HilbertSeries::denominator_string() const
{
    std::string out;
    for (int d : degrees)
        out += d == 1 ? "(1-t)" : "(1-t^" + std::to_string(d) + ")";
    return out.empty() ? "1" : out;
}

HilbertSeries hilbert_from_basis(const std::vector<long>& dims, const std::vector<int>& degrees)
{
    if (dims.empty())
        throw DomainError("no dimensions given");
    int max_deg = static_cast<int>(dims.size()) - 1;
    int sum_d = std::accumulate(degrees.begin(), degrees.end(), 0);
    int top_d = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    if (max_deg < 2 * sum_d)
        throw Inconclusive("degree bound too small");
    std::vector<Integer> p(max_deg + 1, 0);
    for (int k = 0; k <= max_deg; ++k)
        p[k] = dims[k];
    for (int d : degrees)
        for (int k = max_deg; k >= d; --k)
            p[k] -= p[k - d];
    for (int k = std::max(0, max_deg - top_d); k <= max_deg; ++k)
        if (p[k] != 0)
            throw Inconclusive("degree bound too small");
    int hi = max_deg;
    while (hi > 0 && p[hi] == 0)
        --hi;
    p.resize(hi + 1);
    HilbertSeries h{p, degrees};
    std::vector<Integer> check = h.expand(max_deg);
    for (int k = 0; k <= max_deg; ++k)
        if (check[k] != dims[k])
            throw Inconclusive("no polynomial numerator reproduces the dimensions");
    return h;
}

} // namespace quasinv
