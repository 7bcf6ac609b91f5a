#pragma once

#include "quasinv/groups.hpp"
#include "quasinv/hilbert.hpp"
#include "quasinv/polynomial.hpp"

#include <string>
#include <vector>

namespace quasinv {

// Degreewise basis of a graded subspace of the polynomial ring of a group.
struct GradedBasis {
    std::string group;
    std::vector<std::string> vars;
    int max_degree = 0;
    std::vector<std::vector<Polynomial>> layers;
    // Products of sampled basis elements (total degree <= max_degree) stayed in the span.
    bool closure_checked = false;
    bool closed_under_product = false;

    std::vector<long> dims() const;
};

// Coxeter groups: alpha_H^(2 m_H) | s_H(p) - p for every H.
// Other groups: alpha_H^(n_H m_{H,i}) | e_{H,-i}(p) for every H and i.
bool is_quasi_invariant(const ReflectionGroup& g, const Multiplicity& m, const Polynomial& p);

// Default degree bound 4 * sum of the invariant degrees.
int default_max_degree(const ReflectionGroup& g);

// Homogeneous basis of Q_m(W) in degrees 0..D, obtained as the nullspace of
// the quasi-invariance conditions on each degree's monomials.
GradedBasis quasi_basis(const ReflectionGroup& g, const Multiplicity& m, int max_degree);

// Linear functionals cutting out Q_m in degree d: rows act on the
// coefficient vector of a degree-d polynomial in monomials_of_degree order.
Matrix<Cyclotomic> quasi_conditions(const ReflectionGroup& g, const Multiplicity& m, int degree);

HilbertSeries hilbert(const ReflectionGroup& g, const Multiplicity& m, int max_degree);

// Basic invariants f_1..f_r, degrees in invariant_degrees() order.
std::vector<Polynomial> fundamental_invariants(const ReflectionGroup& g);
// Reynolds average of p.
Polynomial reynolds(const ReflectionGroup& g, const Polynomial& p);

struct FreenessCertificate {
    std::string status;  // "free", "not-free", "inconclusive"
    std::string reason;
    int group_order = 0;
    std::vector<int> generator_degrees;
    std::vector<Polynomial> generators;
    std::vector<long> dims;
    bool hilbert_matches = false;
};

// Greedy minimal generators of a graded module over the invariants (given by
// its layers), then a comparison with the free module on those generators.
FreenessCertificate freeness_of_layers(const ReflectionGroup& g, const GradedBasis& b);
FreenessCertificate freeness_certificate(const ReflectionGroup& g, const Multiplicity& m, int max_degree);

struct GorensteinResult {
    int shift = 0;
    int expected = 0;  // dim V - 2 sum_H m_H
    bool palindromic = false;
    bool matches = false;
    HilbertSeries series;
};
// Only for Coxeter groups; requires a free certificate.
GorensteinResult gorenstein_shift(const ReflectionGroup& g, const Multiplicity& m, int max_degree);

struct FiltrationResult {
    bool contained = true;       // Q_{upper} subset of Q_{lower} in every degree
    bool zero_is_full = true;    // Q_0 = Q[V]
    std::vector<long> dims_lower, dims_upper;
};
FiltrationResult filtration_check(const ReflectionGroup& g, const Multiplicity& lower, const Multiplicity& upper,
                                  int max_degree);

// Elements p e0 + q e1 of Q[x] (x) QW for W = Z/2, e0 = (1+s)/2, e1 = (1-s)/2.
struct CWElement {
    Polynomial p, q;
};
// Q[x] e0 + Q[x] x^(2k) e1 for k in (1/2) Z, k >= 0.
struct CWValuedBasis {
    Rational k;
    int max_degree = 0;
    std::vector<std::vector<CWElement>> layers;
    std::vector<long> dims() const;
};
CWValuedBasis cw_valued_basis(const Rational& k, int max_degree);
bool cw_member(const Rational& k, const CWElement& f);
// x.(p, q) = (x p, x q); s.(p, q) = (s(p), -s(q)) for the action s(a (x) w) = s(a) (x) s w.
CWElement cw_act_x(const CWElement& f);
CWElement cw_act_s(const CWElement& f);

// Span helper: incremental echelon basis of vectors over a field.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t dim) : dim_(dim) {}
    // Adds v when independent of the current span; returns whether it was added.
    bool add(const std::vector<Cyclotomic>& v);
    bool contains(const std::vector<Cyclotomic>& v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<Cyclotomic> reduce(std::vector<Cyclotomic> v) const;
    std::size_t dim_;
    std::vector<std::vector<Cyclotomic>> rows_;
    std::vector<std::size_t> pivots_;
};

// Coefficients of a homogeneous polynomial of degree d in monomials_of_degree order.
std::vector<Cyclotomic> coefficient_vector(const Polynomial& p, int nvars, int d);
Polynomial from_coefficients(const std::vector<std::string>& vars, int d, const std::vector<Cyclotomic>& c);

} // namespace quasinv
