#include "quasinv/zq_series.hpp"

#include "quasinv/errors.hpp"

#include <algorithm>
#include <set>

namespace quasinv {

QSeries qseries_mul(const QSeries& a, const QSeries& b, int n)
{
    QSeries r(n);
    int na = std::min<int>(a.size(), n), nb = std::min<int>(b.size(), n);
    for (int i = 0; i < na; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; j < nb && i + j < n; ++j)
            if (!b[j].is_zero())
                r[i + j] += a[i] * b[j];
    }
    return r;
}

QSeries qseries_inverse(const QSeries& a, int n)
{
    if (a.empty() || a[0].is_zero())
        throw DomainError("q-series without constant term is not invertible");
    QSeries r(n);
    Rational inv0 = a[0].inverse();
    for (int k = 0; k < n; ++k) {
        Rational s = k == 0 ? Rational(1) : Rational(0);
        for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i)
            if (!a[i].is_zero())
                s -= a[i] * r[k - i];
        r[k] = s * inv0;
    }
    return r;
}

QSeries q_pochhammer(int n)
{
    QSeries r(n);
    if (n > 0)
        r[0] = 1;
    for (int k = 1; k < n; ++k) {
        QSeries f(n);
        f[0] = 1;
        f[k] = -1;
        r = qseries_mul(r, f, n);
    }
    return r;
}

int qseries_valuation(const QSeries& a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero())
            return static_cast<int>(i);
    return -1;
}

ZQSeries::ZQSeries(int q_order) : n_(q_order)
{
    if (q_order < 1)
        throw DomainError("q-order must be positive");
}

ZQSeries ZQSeries::monomial(int w, int qexp, const Rational& c, int q_order)
{
    ZQSeries s(q_order);
    if (qexp < 0)
        throw DomainError("negative q-exponent");
    if (qexp < q_order && !c.is_zero()) {
        s.c_[w] = QSeries(q_order);
        s.c_[w][qexp] = c;
    }
    s.refresh_hull();
    return s;
}

ZQSeries ZQSeries::from_qseries(int w_exp, const QSeries& a, int q_order)
{
    ZQSeries s(q_order);
    QSeries v(q_order);
    for (int i = 0; i < q_order && i < static_cast<int>(a.size()); ++i)
        v[i] = a[i];
    s.c_[w_exp] = v;
    s.normalize();
    s.refresh_hull();
    return s;
}

Rational ZQSeries::coeff(int w, int qexp) const
{
    if (qexp < 0 || qexp >= n_)
        throw DomainError("q-exponent outside the truncation order");
    if (!in_window(w))
        throw DomainError("z-exponent outside the exact window");
    auto it = c_.find(w);
    return it == c_.end() ? Rational(0) : it->second[qexp];
}

QSeries ZQSeries::coeff_series(int w) const
{
    if (!in_window(w))
        throw DomainError("z-exponent outside the exact window");
    auto it = c_.find(w);
    return it == c_.end() ? QSeries(n_) : it->second;
}

bool ZQSeries::has_integer_exponents() const
{
    for (const auto& [w, a] : c_)
        if (w % 2 != 0)
            return false;
    return true;
}

void ZQSeries::normalize()
{
    for (auto it = c_.begin(); it != c_.end();) {
        it->second.resize(n_);
        bool zero = std::all_of(it->second.begin(), it->second.end(), [](const Rational& r) { return r.is_zero(); });
        if (zero)
            it = c_.erase(it);
        else
            ++it;
    }
}

void ZQSeries::refresh_hull()
{
    if (!complete_)
        return;
    if (c_.empty()) {
        lo_ = hi_ = 0;
    } else {
        lo_ = c_.begin()->first;
        hi_ = c_.rbegin()->first;
    }
}

ZQSeries ZQSeries::operator-() const
{
    ZQSeries r = *this;
    for (auto& [w, a] : r.c_)
        for (auto& v : a)
            v = -v;
    return r;
}

ZQSeries& ZQSeries::operator+=(const ZQSeries& o)
{
    int n = std::min(n_, o.n_);
    bool complete = complete_ && o.complete_;
    int lo = 0, hi = 0;
    if (!complete) {
        if (!complete_ && !o.complete_) {
            lo = std::max(lo_, o.lo_);
            hi = std::min(hi_, o.hi_);
        } else if (!complete_) {
            lo = lo_;
            hi = hi_;
        } else {
            lo = o.lo_;
            hi = o.hi_;
        }
    }
    for (const auto& [w, a] : o.c_) {
        auto& dst = c_[w];
        dst.resize(std::max<std::size_t>(dst.size(), n_));
        for (int i = 0; i < n && i < static_cast<int>(a.size()); ++i)
            dst[i] += a[i];
    }
    n_ = n;
    complete_ = complete;
    if (!complete) {
        lo_ = lo;
        hi_ = hi;
        for (auto it = c_.begin(); it != c_.end();)
            it = (it->first < lo || it->first > hi) ? c_.erase(it) : std::next(it);
    }
    normalize();
    refresh_hull();
    return *this;
}

ZQSeries& ZQSeries::operator-=(const ZQSeries& o)
{
    return *this += -o;
}

ZQSeries operator*(const ZQSeries& a, const ZQSeries& b)
{
    int n = std::min(a.n_, b.n_);
    ZQSeries r(n);
    for (const auto& [wa, sa] : a.c_)
        for (const auto& [wb, sb] : b.c_) {
            QSeries p = qseries_mul(sa, sb, n);
            auto& dst = r.c_[wa + wb];
            dst.resize(n);
            for (int i = 0; i < n; ++i)
                dst[i] += p[i];
        }
    if (a.complete_ && b.complete_) {
        r.complete_ = true;
    } else {
        r.complete_ = false;
        if (a.complete_ || b.complete_) {
            const ZQSeries& c = a.complete_ ? a : b;
            const ZQSeries& p = a.complete_ ? b : a;
            if (c.c_.empty()) {
                r.complete_ = true;
            } else {
                r.lo_ = c.hi_ + p.lo_;
                r.hi_ = c.lo_ + p.hi_;
            }
        } else {
            r.lo_ = a.lo_ + b.lo_;
            r.hi_ = std::min(a.hi_ + b.lo_, b.hi_ + a.lo_);
        }
        if (!r.complete_)
            for (auto it = r.c_.begin(); it != r.c_.end();)
                it = (it->first < r.lo_ || it->first > r.hi_) ? r.c_.erase(it) : std::next(it);
    }
    r.normalize();
    r.refresh_hull();
    return r;
}

ZQSeries ZQSeries::scaled(const Rational& c) const
{
    ZQSeries r = *this;
    for (auto& [w, a] : r.c_)
        for (auto& v : a)
            v *= c;
    r.normalize();
    r.refresh_hull();
    return r;
}

ZQSeries ZQSeries::pow(int e) const
{
    if (e < 0)
        throw DomainError("negative power of a z,q-series");
    ZQSeries r = constant(Rational(1), n_), base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

ZQSeries ZQSeries::restrict(int lo, int hi) const
{
    ZQSeries r = *this;
    bool dropped = false;
    for (auto it = r.c_.begin(); it != r.c_.end();) {
        if (it->first < lo || it->first > hi) {
            dropped = true;
            it = r.c_.erase(it);
        } else {
            ++it;
        }
    }
    if (complete_ && !dropped)
        return r;
    r.complete_ = false;
    r.lo_ = complete_ ? lo : std::max(lo, lo_);
    r.hi_ = complete_ ? hi : std::min(hi, hi_);
    return r;
}

ZQSeries ZQSeries::truncate_q(int n) const
{
    ZQSeries r = *this;
    r.n_ = std::min(n, n_);
    r.normalize();
    r.refresh_hull();
    return r;
}

ZQSeries ZQSeries::shifted(int w_shift, int q_shift) const
{
    if (q_shift < 0)
        throw DomainError("negative q-shift");
    ZQSeries r(n_);
    r.complete_ = complete_;
    r.lo_ = lo_ + w_shift;
    r.hi_ = hi_ + w_shift;
    for (const auto& [w, a] : c_) {
        QSeries v(n_);
        for (int i = 0; i + q_shift < n_; ++i)
            v[i + q_shift] = a[i];
        r.c_[w + w_shift] = v;
    }
    r.normalize();
    r.refresh_hull();
    return r;
}

ZQSeries ZQSeries::reflect() const
{
    ZQSeries r(n_);
    r.complete_ = complete_;
    r.lo_ = -hi_;
    r.hi_ = -lo_;
    for (const auto& [w, a] : c_)
        r.c_[-w] = a;
    r.refresh_hull();
    return r;
}

ZQSeries ZQSeries::negate_z() const
{
    if (!has_integer_exponents())
        throw DomainError("z -> -z needs integer z-exponents");
    ZQSeries r = *this;
    for (auto& [w, a] : r.c_)
        if ((w / 2) % 2 != 0)
            for (auto& v : a)
                v = -v;
    return r;
}

ZQSeries ZQSeries::square_z() const
{
    ZQSeries r(n_);
    r.complete_ = complete_;
    r.lo_ = 2 * lo_;
    r.hi_ = 2 * hi_;
    for (const auto& [w, a] : c_)
        r.c_[2 * w] = a;
    r.refresh_hull();
    return r;
}

bool ZQSeries::agrees_with(const ZQSeries& o) const
{
    int n = std::min(n_, o.n_);
    std::set<int> keys;
    for (const auto& [w, a] : c_)
        keys.insert(w);
    for (const auto& [w, a] : o.c_)
        keys.insert(w);
    for (int w : keys) {
        if (!in_window(w) || !o.in_window(w))
            continue;
        QSeries x = coeff_series(w), y = o.coeff_series(w);
        for (int i = 0; i < n; ++i)
            if (x[i] != y[i])
                return false;
    }
    return true;
}

bool ZQSeries::is_zero() const
{
    return c_.empty();
}

std::size_t ZQSeries::term_count() const
{
    std::size_t k = 0;
    for (const auto& [w, a] : c_)
        for (const auto& v : a)
            if (!v.is_zero())
                ++k;
    return k;
}

std::string ZQSeries::to_string() const
{
    std::string out;
    for (const auto& [w, a] : c_) {
        for (int j = 0; j < n_; ++j) {
            if (a[j].is_zero())
                continue;
            std::string mono;
            if (w != 0)
                mono += w % 2 == 0 ? "z^" + std::to_string(w / 2) : "z^(" + std::to_string(w) + "/2)";
            if (j != 0)
                mono += (mono.empty() ? "" : "*") + std::string("q^") + std::to_string(j);
            bool neg = a[j].sign() < 0;
            std::string mag = (neg ? -a[j] : a[j]).to_string();
            std::string term = mono.empty() ? mag : (mag == "1" ? mono : mag + "*" + mono);
            if (out.empty())
                out = neg ? "-" + term : term;
            else
                out += (neg ? " - " : " + ") + term;
        }
    }
    return (out.empty() ? "0" : out) + " + O(q^" + std::to_string(n_) + ")";
}

} // namespace quasinv
