#pragma once

#include "quasinv/errors.hpp"
#include "quasinv/zq_series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quasinv {

// Exponents are stored in units of w = z^(1/2); windows below are in z-units.
constexpr int kDefaultQOrder = 12;
constexpr int kDefaultZWindow = 12;
// kDefaultQOrder, or QUASINV_DEFAULT_QORDER when set to a positive integer.
int default_q_order();

struct ThetaElement {
    ZQSeries series;
    std::optional<int> degree;  // section of L^n
    std::string label;
};

enum class ThetaForm { Sum, Product };
ThetaForm parse_theta_form(const std::string& s);

// (1 - z) prod_{0<k<N} (1 - q^k z)(1 - q^k / z), or the series
// (q;q)_inf^-1 sum_k q^(k(k-1)/2) (-z)^k, restricted to [lo, hi] (must contain [-2, 2]).
ThetaElement theta(ThetaForm form, int lo, int hi, int q_order);
// (z^(1/2) - z^(-1/2)) prod_{0<k<N} (1 - q^k z)(1 - q^k / z), restricted to [lo, hi].
ThetaElement jacobi_theta(int lo, int hi, int q_order);
// Unrestricted (complete) versions.
ZQSeries theta_series(ThetaForm form, int q_order);
ZQSeries jacobi_theta_series(int q_order);

// Checks a_(w+b2) = eps q^((w+a2)/2) a_w for the coefficients a_w of w^w.
// The section equation f(qz) q^n z^(2n) = f(z) is eps = 1, a2 = 2n, b2 = 4n;
// Theta(qz) = -z^-1 Theta(z) is eps = -1, a2 = 0, b2 = 2.
struct FunctionalEquationCertificate {
    Verdict verdict = Verdict::Inconclusive;
    int lo = 0, hi = 0;  // w-range of the first index of the checked pairs
    int q_order = 0;
    std::string relation;
};
FunctionalEquationCertificate check_recurrence(const ZQSeries& f, int eps, int a2, int b2);
FunctionalEquationCertificate check_functional_equation(const ZQSeries& f, int n);

// Sections of L^n: the units u_r, -n < r <= n, with z^r coefficient 1 and
// a_(r + 2nt) = q^(tr + n t^2).
struct SectionSpace {
    int degree = 0;
    int q_order = 0;
    std::vector<int> indices;  // r for each basis element
    std::vector<ThetaElement> basis;
    int dimension() const { return static_cast<int>(basis.size()); }
};
SectionSpace section_basis(int n, int q_order);

// Coordinates of f in the unit basis; empty when f is not a section of L^n.
std::optional<std::vector<QSeries>> section_coordinates(const SectionSpace& space, const ZQSeries& f);

// Rank over Q((q)) of a matrix of q-series, pivoting on minimal valuation.
// Pivots are certified modulo q^N, so the result is a lower bound for the true rank.
int qseries_rank(std::vector<std::vector<QSeries>> rows, int q_order);

// Vanishing order at z = 1 (kInfiniteOrder for zero).
struct ThetaDivisibility {
    Verdict verdict = Verdict::Inconclusive;
    int order = 0;
    std::string symmetry;  // invariant, anti-invariant or none
};
// Decides Theta^k | f for a section f; inconclusive when a partial series
// has terms within one step of its window boundary.
ThetaDivisibility theta_divisibility(const ZQSeries& f, int k);

struct GradedDimension {
    int m = 0, n = 0;
    int invariant_dim = 0;
    int anti_dim = 0;
    int formula = 0;
    // Certified bounds from the explicit linear algebra.
    int invariant_lower = 0, invariant_upper = 0;
    int anti_lower = 0, anti_upper = 0;
    bool verified = false;
};
constexpr int kMaxEllDegree = 8;
// (n + 1) + max(0, n - m - 1), verified through q^N.
GradedDimension ell_graded_dimension(int m, int n, int q_order);

struct SheafDims {
    int m = 0;
    int h0 = 0, h1 = 0;
    int h1_invariant = 0, h1_anti = 0;
    int h0_invariant = 0;
    bool euler_consistent = false;
};
SheafDims ell_sheaf_dims(int m);

struct GGenerator {
    ThetaElement g;
    bool simplification_holds = false;  // g = (1 + z^-1) Theta theta^(2m)
    bool anti_invariant = false;
    int theta_order = 0;                // vanishing order along Theta
    Verdict divisible = Verdict::Inconclusive;      // Theta^(2m+1) | g
    Verdict not_divisible = Verdict::Inconclusive;  // Theta^(2m+2) does not divide g
};
// (Theta(z) - Theta(z^-1)) theta(z)^(2m); the z-window must contain [-(2m+2), 2m+2].
GGenerator ell_g_generator(int m, int lo, int hi, int q_order);

} // namespace quasinv
