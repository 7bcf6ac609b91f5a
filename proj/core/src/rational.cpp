#include "quasinv/rational.hpp"

#include "quasinv/errors.hpp"

#include <cctype>

namespace quasinv {

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

static bool valid_integer_text(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Rational Rational::parse(const std::string& text)
{
    auto slash = text.find('/');
    std::string a = text.substr(0, slash);
    std::string b = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!a.empty() && a[0] == '+')
        a = a.substr(1);
    if (!valid_integer_text(a) || !valid_integer_text(b) || b[0] == '-' || b[0] == '+')
        throw ParseError("malformed rational '" + text + "'");
    Integer n(a, 10), d(b, 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + text + "'");
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const
{
    return Rational(1) / *this;
}

Rational Rational::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::string Rational::to_string() const
{
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Integer ipow(const Integer& b, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

} // namespace quasinv
