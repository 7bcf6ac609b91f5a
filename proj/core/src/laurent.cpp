#include "quasinv/laurent.hpp"

#include "quasinv/errors.hpp"

#include <cctype>
#include <vector>

namespace quasinv {

LaurentElement::LaurentElement(const Rational& c)
{
    add_term(0, c);
}

LaurentElement LaurentElement::w_power(int e, const Rational& c)
{
    LaurentElement r;
    r.add_term(e, c);
    return r;
}

LaurentElement LaurentElement::z_power(int k, const Rational& c)
{
    return w_power(2 * k, c);
}

bool LaurentElement::has_integer_exponents() const
{
    for (const auto& [w, c] : terms_)
        if (w % 2 != 0)
            return false;
    return true;
}

bool LaurentElement::has_integer_coefficients() const
{
    for (const auto& [w, c] : terms_)
        if (!c.is_integer())
            return false;
    return true;
}

Rational LaurentElement::coeff(int w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentElement::add_term(int w, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LaurentElement LaurentElement::operator-() const
{
    LaurentElement r = *this;
    for (auto& [w, c] : r.terms_)
        c = -c;
    return r;
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b)
{
    LaurentElement r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_)
            r.add_term(wa + wb, ca * cb);
    return r;
}

LaurentElement operator*(LaurentElement a, const Rational& c)
{
    if (c.is_zero())
        return LaurentElement();
    for (auto& [w, v] : a.terms_)
        v *= c;
    return a;
}

LaurentElement LaurentElement::pow(int e) const
{
    if (e < 0) {
        if (terms_.size() != 1)
            throw DomainError("negative power of a non-monomial Laurent element");
        auto [w, c] = *terms_.begin();
        return w_power(-w * (-e), c.pow(e));
    }
    LaurentElement r(Rational(1)), base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

LaurentElement LaurentElement::reflect() const
{
    LaurentElement r;
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(-w, c);
    return r;
}

Rational LaurentElement::at_one() const
{
    Rational s(0);
    for (const auto& [w, c] : terms_)
        s += c;
    return s;
}

std::optional<LaurentElement> LaurentElement::divide_exact(const LaurentElement& q) const
{
    if (q.is_zero())
        throw DomainError("division by zero Laurent element");
    if (is_zero())
        return LaurentElement();
    // Shift both to ordinary polynomials in w and divide from the top.
    int qlo = q.low();
    int n = high() - low();
    int m = q.high() - qlo;
    if (n < m)
        return std::nullopt;
    std::vector<Rational> a(n + 1), b(m + 1);
    for (const auto& [w, c] : terms_)
        a[w - low()] = c;
    for (const auto& [w, c] : q.terms_)
        b[w - qlo] = c;
    std::vector<Rational> quot(n - m + 1);
    Rational lead_inv = b[m].inverse();
    for (int i = n - m; i >= 0; --i) {
        Rational c = a[i + m] * lead_inv;
        quot[i] = c;
        if (!c.is_zero())
            for (int j = 0; j <= m; ++j)
                a[i + j] -= c * b[j];
    }
    for (const auto& v : a)
        if (!v.is_zero())
            return std::nullopt;
    LaurentElement r;
    for (int i = 0; i <= n - m; ++i)
        r.add_term(low() - qlo + i, quot[i]);
    return r;
}

std::string LaurentElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        std::string mono;
        if (w != 0) {
            mono = "z";
            if (w != 2) {
                if (w % 2 == 0)
                    mono += "^" + std::to_string(w / 2);
                else
                    mono += "^(" + std::to_string(w) + "/2)";
            }
        }
        bool neg = c.sign() < 0;
        std::string mag = (neg ? -c : c).to_string();
        std::string term = mono.empty() ? mag : (mag == "1" ? mono : mag + "*" + mono);
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

namespace {

class LaurentParser {
public:
    explicit LaurentParser(const std::string& s) : s_(s) {}

    LaurentElement parse()
    {
        LaurentElement acc;
        bool first = true;
        skip();
        while (pos_ < s_.size()) {
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            LaurentElement t = term();
            acc += sign < 0 ? -t : t;
            first = false;
            skip();
        }
        if (first)
            fail("empty expression");
        return acc;
    }

private:
    [[noreturn]] void fail(const std::string& msg)
    {
        throw ParseError("Laurent element '" + s_ + "': " + msg);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    std::string digits()
    {
        std::size_t st = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return s_.substr(st, pos_ - st);
    }

    Rational signed_rational()
    {
        skip();
        std::string t;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
            t += s_[pos_++];
        std::string a = digits();
        if (a.empty())
            fail("expected number");
        t += a;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::string b = digits();
            if (b.empty())
                fail("expected denominator");
            t += "/" + b;
        }
        return Rational::parse(t);
    }

    LaurentElement term()
    {
        skip();
        Rational coeff(1);
        bool have_coeff = false;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            coeff = signed_rational();
            have_coeff = true;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*')
                ++pos_;
            skip();
        }
        if (pos_ < s_.size() && s_[pos_] == 'z') {
            ++pos_;
            Rational e(1);
            skip();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                skip();
                bool paren = pos_ < s_.size() && s_[pos_] == '(';
                if (paren)
                    ++pos_;
                e = signed_rational();
                if (paren) {
                    skip();
                    if (pos_ >= s_.size() || s_[pos_] != ')')
                        fail("expected ')'");
                    ++pos_;
                }
            }
            Rational w = e * Rational(2);
            if (!w.is_integer())
                fail("exponents must be integers or half-integers");
            return LaurentElement::w_power(static_cast<int>(w.num().get_si()), coeff);
        }
        if (!have_coeff)
            fail("expected term");
        return LaurentElement(coeff);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

LaurentElement LaurentElement::parse(const std::string& text)
{
    return LaurentParser(text).parse();
}

LaurentElement laurent_delta()
{
    return LaurentElement::z_power(1) - LaurentElement(Rational(2)) + LaurentElement::z_power(-1);
}

} // namespace quasinv
