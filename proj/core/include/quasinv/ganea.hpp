#pragma once

#include "quasinv/quasi_invariants.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace quasinv {

using PolyLayers = std::vector<std::vector<Polynomial>>;
using Vec = std::vector<Cyclotomic>;

// Degreewise matrices (target dim x source dim).
struct GradedAlgebraMap {
    std::vector<Matrix<Cyclotomic>> by_degree;
};

// A x_C B = {(a, b) : f(a) = g(b)} computed degreewise as a nullspace.
struct FiberProductAlgebra {
    int max_degree = 0;
    std::vector<std::vector<std::pair<Vec, Vec>>> layers;
    std::vector<long> dims;
    std::vector<bool> surjective;  // both f_d and g_d onto C_d
    // dim = dim A + dim B - dim C in every degree where both maps are onto.
    bool dimension_formula = true;
};

FiberProductAlgebra fiber_product_basis(const std::vector<long>& dim_a, const std::vector<long>& dim_b,
                                        const std::vector<long>& dim_c, const GradedAlgebraMap& f,
                                        const GradedAlgebraMap& g);

// A / (generator * A) for a graded subalgebra A of a polynomial ring.
struct PolyQuotient {
    std::vector<std::string> vars;
    PolyLayers source, kernel, classes;

    // Coordinates of the class of p (p in A_d) in the basis `classes[d]`.
    Vec project(int d, const Polynomial& p) const;
    GradedAlgebraMap projection() const;
    std::vector<long> dims() const;
    long total_dim() const;
};
PolyQuotient principal_quotient(const std::vector<std::string>& vars, const PolyLayers& a, const Polynomial& generator);

using ClassMap = std::function<Vec(int, const Polynomial&)>;

struct PolyFiberProduct {
    FiberProductAlgebra algebra;
    std::vector<std::vector<std::pair<Polynomial, Polynomial>>> elements;
    bool contains_unit = false;
    bool closed_under_product = false;
};
PolyFiberProduct poly_fiber_product(const std::vector<std::string>& vars, const PolyLayers& a, const PolyLayers& b,
                                    const std::vector<long>& dim_c, const ClassMap& f, const ClassMap& g);

// Q[x] x_{Q[x]/x^n} Q[x].
PolyFiberProduct double_polynomial_fiber(int n, int max_degree);

struct GaneaStep {
    int m = 0;
    PolyQuotient quotient;       // Q_m / (x^2)
    PolyFiberProduct fiber;      // Q_m x_{Q_m/(x^2)} k
    PolyLayers image;            // projection of the fiber product to Q_m
    bool matches_next = false;   // image spans quasi_basis(A1, m+1) degreewise
};
// One step starting from the given layers of Q_m (A1 only).
GaneaStep ganea_step(int m, const PolyLayers& qm, int max_degree);

struct TowerResult {
    std::vector<GaneaStep> steps;
    bool all_match = true;
};
TowerResult ganea_tower(int steps, int max_degree);

struct HtInvariants {
    int m = 0;
    PolyFiberProduct fiber;  // Q[x] x_{Q[x]/x^(2m+1)} Q[x]
    std::vector<std::vector<std::pair<Polynomial, Polynomial>>> invariants;
    std::vector<long> dims;
    bool isomorphic_to_qm = false;  // first projection spans Q_m degreewise
};
// W acts by (p, q) -> (s(q), s(p)).
HtInvariants h_t_invariants(int m, int max_degree);

struct X1Result {
    GradedBasis algebra;  // Q + <Q[V]^W_+>
    FreenessCertificate freeness;
    long coinvariant_dim = 0;
    bool coinvariant_matches_order = false;
    bool equals_q1 = false;  // Coxeter groups: same span as Q_1 in every degree
};
X1Result x1_algebra(const ReflectionGroup& g, int max_degree);

struct PresentationCheck {
    int m = 0;
    std::vector<long> kernel_dims, ideal_dims, quotient_dims;
    bool kernel_is_ideal = false;
    bool quotient_matches_qm = false;
};
// Q[xi, eta] -> Q_m, eta -> x^2, xi -> x^(2m+1); kernel vs (xi^2 - eta^(2m+1)).
PresentationCheck presentation_check(int m, int max_degree);

struct FakeCohomology {
    long nb = 1;
    int m = 0;
    PolyLayers layers;                  // Q'_m with integral generators
    std::vector<Integer> lattice_index; // per degree, index of Q'_m in Q_m over Z (0 when empty)
    bool rational_equals_qm = false;
};
// Q'_0 = Q[x], Q'_m = Q + N_B x^2 Q'_{m-1}.
FakeCohomology fake_cohomology_ring(long nb, int m, int max_degree);

// Whether two layer lists span the same subspaces degreewise.
bool same_spans(const PolyLayers& a, const PolyLayers& b, int nvars);

} // namespace quasinv
