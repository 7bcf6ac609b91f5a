#pragma once

#include "quasinv/errors.hpp"
#include "quasinv/groups.hpp"
#include "quasinv/laurent.hpp"
#include "quasinv/polynomial.hpp"

#include <string>
#include <vector>

namespace quasinv {

// (p - s_H p) / alpha_H for a Coxeter group.
Polynomial delta_classical(const ReflectionGroup& g, int h, const Polynomial& p);

// (p - s_H p) / alpha_H^(2 m_H + 1); p must lie in Q_m (DomainError otherwise).
// For A1 this sends x^(2k+2m+1) to 2 x^(2k) and kills even powers.
Polynomial delta_m(const ReflectionGroup& g, const Multiplicity& m, int h, const Polynomial& p);

// (f - s f) / (1 - z^2) with s: z -> z^-1; needs integer z-exponents.
LaurentElement lambda(const LaurentElement& f);

// Order of vanishing of lambda(f) at z = 1 (kInfiniteOrder when lambda(f) = 0).
int exp_quasi_order(const LaurentElement& f);
bool is_exp_quasi_invariant(int m, const LaurentElement& f);

// {delta^j : j < m} together with {delta^m z^k : lo <= k <= hi}.
struct ExpBasis {
    int m = 0;
    int lo = 0, hi = 0;
    std::vector<LaurentElement> elements;
    std::vector<std::string> labels;
};
// The window must contain -1..1.
ExpBasis exp_basis(int m, int lo, int hi);

// f = sum_{j<m} c_j delta^j + delta^m g.
struct ExpMembership {
    Verdict rational = Verdict::False;  // over Q
    Verdict integral = Verdict::False;  // over Z
    std::vector<Rational> leading;      // c_0 .. c_{m-1}, as far as they exist
    LaurentElement tail;                // g when the decomposition exists
    bool decomposed = false;
    bool tail_in_window = false;        // g supported in [lo, hi]
};
ExpMembership exp_member(int m, const LaurentElement& f, int lo, int hi);

// Power series in x truncated below x^N.
struct TruncatedExpSeries {
    std::vector<Rational> coeffs;

    int order() const { return static_cast<int>(coeffs.size()); }
    friend TruncatedExpSeries operator*(const TruncatedExpSeries& a, const TruncatedExpSeries& b);
    friend bool operator==(const TruncatedExpSeries& a, const TruncatedExpSeries& b) { return a.coeffs == b.coeffs; }
    // Lowest odd degree with a nonzero coefficient, -1 when none below N.
    int odd_valuation() const;
    std::string to_string() const;
};

// Image under z -> exp(x) (z^(1/2) -> exp(x/2)), no membership requirement.
TruncatedExpSeries exp_substitute(const LaurentElement& f, int order);

struct ChernResult {
    TruncatedExpSeries series;
    int odd_valuation = -1;
    // Odd part of valuation >= 2m+1 (completion of Q_m).
    Verdict in_completed_qm = Verdict::Inconclusive;
};
// f must be exponential quasi-invariant of multiplicity m.
ChernResult chern_character(int m, const LaurentElement& f, int order);

} // namespace quasinv
