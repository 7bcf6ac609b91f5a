#include "quasinv/cyclotomic.hpp"

#include "quasinv/errors.hpp"

#include <map>
#include <mutex>

namespace quasinv {

namespace {

std::vector<long> poly_div_exact(std::vector<long> a, const std::vector<long>& b)
{
    std::vector<long> q(a.size() - b.size() + 1, 0);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        long c = a[i + b.size() - 1] / b.back();
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[i + j] -= c * b[j];
    }
    return q;
}

int normalize_order(int n)
{
    if (n <= 0)
        throw DomainError("cyclotomic order must be positive");
    return n == 2 ? 1 : n;
}

} // namespace

int euler_phi(int n)
{
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            r -= r / p;
        }
    }
    if (n > 1)
        r -= r / n;
    return r;
}

namespace {

std::map<int, std::vector<long>>& phi_cache()
{
    static std::map<int, std::vector<long>> cache;
    return cache;
}

const std::vector<long>& cyclotomic_locked(int n)
{
    auto& cache = phi_cache();
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            p = poly_div_exact(p, cyclotomic_locked(d));
    return cache.emplace(n, p).first->second;
}

} // namespace

const std::vector<long>& cyclotomic_polynomial(int n)
{
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return cyclotomic_locked(n);
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coords)
    : order_(order <= 0 ? 0 : order)
{
    if (order <= 0)
        throw DomainError("cyclotomic order must be positive");
    int phi = euler_phi(order);
    if (coords.size() > static_cast<std::size_t>(phi)) {
        const auto& f = cyclotomic_polynomial(order);
        for (std::size_t k = coords.size() - 1; k >= static_cast<std::size_t>(phi); --k) {
            Rational c = coords[k];
            if (!c.is_zero())
                for (int i = 0; i < phi; ++i)
                    if (f[i] != 0)
                        coords[k - phi + i] -= c * Rational(f[i]);
        }
    }
    coords.resize(phi);
    if (order == 2) {
        order_ = 1;
    }
    coords_ = std::move(coords);
}

Cyclotomic Cyclotomic::zeta(int n, long k)
{
    if (n == 2)
        return Cyclotomic(k % 2 == 0 ? 1 : -1);
    n = normalize_order(n);
    if (n == 1)
        return Cyclotomic(1);
    long e = ((k % n) + n) % n;
    std::vector<Rational> c(e + 1);
    c[e] = 1;
    return Cyclotomic(n, std::move(c));
}

bool Cyclotomic::is_zero() const
{
    for (const auto& c : coords_)
        if (!c.is_zero())
            return false;
    return true;
}

bool Cyclotomic::is_one() const
{
    if (!coords_[0].is_one())
        return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero())
            return false;
    return true;
}

bool Cyclotomic::is_rational() const
{
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero())
            return false;
    return true;
}

Rational Cyclotomic::rational_value() const
{
    if (!is_rational())
        throw DomainError("cyclotomic element is not rational");
    return coords_[0];
}

int Cyclotomic::common_order(int a, int b)
{
    if (a == b || b == 1)
        return a;
    if (a == 1)
        return b;
    throw FieldMismatch("mixed cyclotomic fields Q(zeta_" + std::to_string(a) + ") and Q(zeta_" +
                        std::to_string(b) + ")");
}

Cyclotomic Cyclotomic::embed(int n) const
{
    n = normalize_order(n);
    if (n == order_)
        return *this;
    if (n % order_ != 0)
        throw FieldMismatch("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                            std::to_string(n) + ")");
    int step = n / order_;
    std::vector<Rational> c(static_cast<std::size_t>(step) * (coords_.size() - 1) + 1);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        c[i * step] = coords_[i];
    return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto& c : r.coords_)
        c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
    int n = common_order(order_, o.order_);
    if (n != order_)
        *this = embed(n);
    if (o.order_ == n) {
        for (std::size_t i = 0; i < coords_.size(); ++i)
            coords_[i] += o.coords_[i];
    } else {
        coords_[0] += o.coords_[0];
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o)
{
    return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o)
{
    int n = common_order(order_, o.order_);
    if (o.order_ == 1) {
        const Rational& s = o.coords_[0];
        if (n != order_)
            *this = embed(n);
        for (auto& c : coords_)
            c *= s;
        return *this;
    }
    if (order_ == 1) {
        Rational s = coords_[0];
        *this = o;
        for (auto& c : coords_)
            c *= s;
        return *this;
    }
    std::size_t k = coords_.size();
    std::vector<Rational> prod(2 * k - 1);
    for (std::size_t i = 0; i < k; ++i) {
        if (coords_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < k; ++j)
            if (!o.coords_[j].is_zero())
                prod[i + j] += coords_[i] * o.coords_[j];
    }
    *this = Cyclotomic(n, std::move(prod));
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order_ == b.order_)
        return a.coords_ == b.coords_;
    if (a.is_rational() && b.is_rational())
        return a.coords_[0] == b.coords_[0];
    return false;
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero())
        throw DomainError("division by zero");
    if (order_ == 1)
        return Cyclotomic(coords_[0].inverse());
    // Solve M c = e_0 where column j of M holds the coordinates of this * zeta^j.
    std::size_t k = coords_.size();
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1));
    Cyclotomic col = *this;
    Cyclotomic z = zeta(order_, 1);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i)
            m[i][j] = col.coords_[i];
        col *= z;
    }
    m[0][k] = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (m[p][c].is_zero())
            ++p;
        std::swap(m[p], m[c]);
        Rational inv = m[c][c].inverse();
        for (std::size_t j = c; j <= k; ++j)
            m[c][j] *= inv;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c || m[r][c].is_zero())
                continue;
            Rational f = m[r][c];
            for (std::size_t j = c; j <= k; ++j)
                m[r][j] -= f * m[c][j];
        }
    }
    std::vector<Rational> res(k);
    for (std::size_t i = 0; i < k; ++i)
        res[i] = m[i][k];
    return Cyclotomic(order_, std::move(res));
}

Cyclotomic Cyclotomic::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Cyclotomic result(1), base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Cyclotomic Cyclotomic::conj() const
{
    if (order_ == 1)
        return *this;
    std::vector<Rational> c(order_);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        c[(order_ - static_cast<int>(i)) % order_] += coords_[i];
    return Cyclotomic(order_, std::move(c));
}

std::string Cyclotomic::to_string() const
{
    if (is_rational())
        return coords_[0].to_string();
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Rational& c = coords_[i];
        if (c.is_zero())
            continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "zeta" : "zeta^" + std::to_string(i));
        std::string coef = c.to_string();
        bool neg = c.sign() < 0;
        std::string mag = neg ? coef.substr(1) : coef;
        std::string term;
        if (mono.empty())
            term = mag;
        else if (mag == "1")
            term = mono;
        else
            term = mag + "*" + mono;
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += neg ? " - " + term : " + " + term;
    }
    return "(" + out + ")_" + std::to_string(order_);
}

} // namespace quasinv
