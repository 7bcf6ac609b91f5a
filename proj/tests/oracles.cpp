#include "oracles.hpp"

#include "quasinv/linalg.hpp"

namespace oracle {

using quasinv::Cyclotomic;
using quasinv::Integer;
using quasinv::Matrix;
using quasinv::Rational;

std::vector<long> a1n_dims(const std::vector<int>& m, int max_degree)
{
    // Per-variable allowed exponents, then a convolution.
    std::vector<long> dims(max_degree + 1, 0);
    dims[0] = 1;
    for (int mi : m) {
        std::vector<long> next(max_degree + 1, 0);
        for (int d = 0; d <= max_degree; ++d)
            for (int a = 0; a <= d; ++a)
                if (a % 2 == 0 || a >= 2 * mi + 1)
                    next[d] += dims[d - a];
        dims = next;
    }
    return dims;
}

bool cyclic_member(int l, const std::vector<int>& m, int j)
{
    int i = j % l;
    return i == 0 || j >= l * m.at(i - 1);
}

std::vector<long> cyclic_dims(int l, const std::vector<int>& m, int max_degree)
{
    std::vector<long> dims;
    for (int j = 0; j <= max_degree; ++j)
        dims.push_back(cyclic_member(l, m, j) ? 1 : 0);
    return dims;
}

static Integer falling(int a, int i)
{
    Integer r = 1;
    for (int k = 0; k < i; ++k)
        r *= (a - k);
    return r;
}

std::vector<long> dihedral_dims(int k, int m_even, int m_odd, int max_degree)
{
    std::vector<long> dims;
    for (int d = 0; d <= max_degree; ++d) {
        // Columns: monomials z1^a z2^(d-a). For p = z1^a z2^b the reflection gives
        // zeta^(j(a-b)) z2^a z1^b, so at z2 = 1 the difference is zeta^(j(a-b)) t^b - t^a and its
        // i-th derivative at t = zeta^j is zeta^(j(a-i)) (b^(i) - a^(i)).
        Matrix<Cyclotomic> rows(0, d + 1);
        for (int j = 0; j < k; ++j) {
            int mj = j % 2 == 0 ? m_even : m_odd;
            for (int i = 0; i < 2 * mj; ++i) {
                std::vector<Cyclotomic> row;
                for (int a = 0; a <= d; ++a) {
                    int b = d - a;
                    Integer c = falling(b, i) - falling(a, i);
                    long e = (static_cast<long>(j) * (a - i)) % k;
                    if (e < 0)
                        e += k;
                    row.push_back(Cyclotomic::zeta(k, e) * Cyclotomic(Rational(c)));
                }
                rows.append_row(row);
            }
        }
        long r = rows.rows() == 0 ? 0 : static_cast<long>(quasinv::rank(rows));
        dims.push_back(d + 1 - r);
    }
    return dims;
}

std::vector<long> molien_free(const std::vector<int>& degrees, int max_degree)
{
    std::vector<long> c(max_degree + 1, 0);
    c[0] = 1;
    for (int d : degrees)
        for (int n = d; n <= max_degree; ++n)
            c[n] += c[n - d];
    return c;
}

long monomial_count(int nvars, int d)
{
    // C(d + n - 1, n - 1)
    Integer r = 1;
    for (int i = 1; i < nvars; ++i)
        r = r * (d + i) / i;
    return r.get_si();
}

std::vector<Integer> series_mul(const std::vector<Integer>& a, const std::vector<Integer>& b, int n)
{
    std::vector<Integer> r(n, 0);
    for (int i = 0; i < n && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j < n && j < static_cast<int>(b.size()); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

std::vector<Rational> exp_series(const Rational& a, int n)
{
    std::vector<Rational> r;
    Rational term = 1;
    for (int k = 0; k < n; ++k) {
        r.push_back(term);
        term = term * a / Rational(k + 1);
    }
    return r;
}

} // namespace oracle
