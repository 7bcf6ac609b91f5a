#pragma once

#include "quasinv/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace quasinv {

// Truncated power series in q: coefficients of q^0 .. q^(N-1).
using QSeries = std::vector<Rational>;

QSeries qseries_mul(const QSeries& a, const QSeries& b, int n);
// Inverse of a power series with nonzero constant term.
QSeries qseries_inverse(const QSeries& a, int n);
// (q;q)_infinity truncated at q^n.
QSeries q_pochhammer(int n);
int qseries_valuation(const QSeries& a);

// Sum of c_{w,j} w^k q^j with w = z^(1/2), known modulo q^N.
//
// Coefficients are exact for w-exponents in [lo, hi]. A complete series has no
// terms outside the stored ones below q^N, so it is exact for every exponent.
// Products follow these window rules:
//   complete * complete  -> complete;
//   complete * partial   -> [hi1 + lo2, lo1 + hi2];
//   partial  * partial   -> [lo1 + lo2, min(hi1 + lo2, hi2 + lo1)], which assumes
//                           both factors vanish below their windows.
class ZQSeries {
public:
    ZQSeries() = default;
    explicit ZQSeries(int q_order);

    static ZQSeries monomial(int w, int qexp, const Rational& c, int q_order);
    static ZQSeries constant(const Rational& c, int q_order) { return monomial(0, 0, c, q_order); }
    // Lifts a q-series to a coefficient of w^w_exp.
    static ZQSeries from_qseries(int w_exp, const QSeries& a, int q_order);

    int q_order() const { return n_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool complete() const { return complete_; }
    const std::map<int, QSeries>& coeffs() const { return c_; }

    Rational coeff(int w, int qexp) const;
    QSeries coeff_series(int w) const;
    bool in_window(int w) const { return complete_ || (w >= lo_ && w <= hi_); }
    bool has_integer_exponents() const;

    ZQSeries operator-() const;
    ZQSeries& operator+=(const ZQSeries& o);
    ZQSeries& operator-=(const ZQSeries& o);
    friend ZQSeries operator+(ZQSeries a, const ZQSeries& b) { return a += b; }
    friend ZQSeries operator-(ZQSeries a, const ZQSeries& b) { return a -= b; }
    friend ZQSeries operator*(const ZQSeries& a, const ZQSeries& b);
    ZQSeries scaled(const Rational& c) const;
    ZQSeries pow(int e) const;

    // Keeps only w-exponents in [lo, hi]; the result is partial when terms were dropped.
    ZQSeries restrict(int lo, int hi) const;
    ZQSeries truncate_q(int n) const;
    // Multiplication by w^s q^t.
    ZQSeries shifted(int w_shift, int q_shift) const;
    // z -> z^-1.
    ZQSeries reflect() const;
    // z -> -z; needs integer z-exponents.
    ZQSeries negate_z() const;
    // z -> z^2.
    ZQSeries square_z() const;

    // Equality of all coefficients inside both windows, below both q-orders.
    bool agrees_with(const ZQSeries& o) const;
    bool is_zero() const;
    std::size_t term_count() const;
    std::string to_string() const;

private:
    void normalize();
    void refresh_hull();

    int n_ = 0;
    int lo_ = 0, hi_ = 0;
    bool complete_ = true;
    std::map<int, QSeries> c_;
};

} // namespace quasinv
