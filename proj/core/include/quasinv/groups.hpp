#pragma once

#include "quasinv/cyclotomic.hpp"
#include "quasinv/linalg.hpp"
#include "quasinv/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace quasinv {

// A group element acts on polynomials by substitution: x_i -> sum_j sub(i,j) x_j.
// This is p -> p o w^-1 when w acts on V by the inverse of sub.
struct GroupElement {
    Matrix<Cyclotomic> sub;
    Cyclotomic det;  // determinant of the action on V
};

struct Hyperplane {
    Polynomial alpha;           // normalized: first nonzero coefficient 1
    int order = 2;              // n_H = |W_H|
    int orbit = 0;
    std::vector<int> elements;  // W_H, identity first
};

class ReflectionGroup {
public:
    const std::string& spec() const { return spec_; }
    int rank() const { return static_cast<int>(vars_.size()); }
    int field_order() const { return field_order_; }
    bool is_coxeter() const { return coxeter_; }
    const std::vector<std::string>& vars() const { return vars_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const GroupElement& element(int w) const { return elements_.at(w); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    int orbit_count() const { return orbit_count_; }
    // n_H shared by the hyperplanes of an orbit.
    int orbit_order(int orbit) const;
    int orbit_size(int orbit) const;
    const std::vector<int>& invariant_degrees() const { return degrees_; }

    int product(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const;
    // Index of the hyperplane w(H).
    int hyperplane_image(int w, int h) const;

    // Images of the variables under w.
    const std::vector<Polynomial>& images(int w) const { return images_.at(w); }
    Polynomial act(int w, const Polynomial& p) const;

    Polynomial zero() const { return Polynomial(vars_); }
    Polynomial one() const { return Polynomial(vars_, Cyclotomic(1)); }
    Polynomial variable(int i) const { return Polynomial::variable(vars_, i); }

private:
    friend ReflectionGroup parse_group(const std::string& spec);
    friend ReflectionGroup build_group(std::string spec, std::vector<std::string> vars, int field_order,
                                       bool coxeter, std::vector<GroupElement> elements, std::vector<int> degrees);

    std::string spec_;
    int field_order_ = 1;
    bool coxeter_ = true;
    std::vector<std::string> vars_;
    std::vector<GroupElement> elements_;
    std::vector<std::vector<int>> table_;
    std::vector<std::vector<Polynomial>> images_;
    std::vector<Hyperplane> hyperplanes_;
    int orbit_count_ = 0;
    std::vector<int> degrees_;
};

// Grammar: "A1" | "A1^n" | "I2(k)" (k >= 3) | "Z/l" (l >= 2) | "G1 x G2".
ReflectionGroup parse_group(const std::string& spec);

// Linear combination of group elements.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(const ReflectionGroup& g) : g_(&g) {}

    void add(int w, const Cyclotomic& c);
    const std::map<int, Cyclotomic>& terms() const { return terms_; }
    Polynomial apply(const Polynomial& p) const;
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a.terms_ == b.terms_; }

private:
    const ReflectionGroup* g_;
    std::map<int, Cyclotomic> terms_;
};

// e_{H,i} = (1/n_H) sum_{w in W_H} det(w)^(-i) w.
GroupAlgebraElement idempotent(const ReflectionGroup& g, int h, int i);

// Per orbit, the values m_{H,1..n_H-1}. Values may be half-integers only
// for rank-one Coxeter groups.
struct Multiplicity {
    std::vector<std::vector<Rational>> values;

    const Rational& at(int orbit, int i) const { return values.at(orbit).at(i - 1); }
    bool integral() const;
    // Largest entry.
    Rational max_value() const;
    std::string to_string() const;
};

// "m" (all entries m) or "orbit:value,..." where a complex orbit value may be
// a '|'-separated vector "1|2". Orbits not mentioned get 0.
Multiplicity parse_multiplicity(const ReflectionGroup& g, const std::string& text);
Multiplicity constant_multiplicity(const ReflectionGroup& g, const Rational& m);
// sum over all hyperplanes of m_H (Coxeter groups).
Rational multiplicity_sum(const ReflectionGroup& g, const Multiplicity& m);

} // namespace quasinv
