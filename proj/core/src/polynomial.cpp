#include "quasinv/polynomial.hpp"

#include "quasinv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace quasinv {

int total_degree(const Monomial& m)
{
    return std::accumulate(m.begin(), m.end(), 0);
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const
{
    int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    return b < a;
}

static void enumerate_monomials(int nvars, int d, int i, Monomial& cur, std::vector<Monomial>& out)
{
    if (i == nvars - 1) {
        cur[i] = d;
        out.push_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[i] = e;
        enumerate_monomials(nvars, d - e, i + 1, cur, out);
    }
}

std::vector<Monomial> monomials_of_degree(int nvars, int d)
{
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    if (nvars == 0) {
        if (d == 0)
            out.emplace_back();
        return out;
    }
    Monomial cur(nvars, 0);
    enumerate_monomials(nvars, d, 0, cur, out);
    return out;
}

Polynomial::Polynomial(std::vector<std::string> vars, const Cyclotomic& c) : vars_(std::move(vars))
{
    if (!c.is_zero())
        terms_.emplace(Monomial(vars_.size(), 0), c);
}

Polynomial Polynomial::variable(const std::vector<std::string>& vars, int i)
{
    Monomial e(vars.size(), 0);
    e.at(i) = 1;
    return monomial(vars, e);
}

Polynomial Polynomial::monomial(const std::vector<std::string>& vars, const Monomial& e, const Cyclotomic& c)
{
    if (e.size() != vars.size())
        throw DomainError("monomial arity mismatch");
    Polynomial p(vars);
    if (!c.is_zero())
        p.terms_.emplace(e, c);
    return p;
}

int Polynomial::degree() const
{
    return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

int Polynomial::low_degree() const
{
    return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous() const
{
    return degree() == low_degree();
}

int Polynomial::field_order() const
{
    int n = 1;
    for (const auto& [e, c] : terms_)
        n = Cyclotomic::common_order(n, c.order());
    return n;
}

Cyclotomic Polynomial::coeff(const Monomial& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

void Polynomial::add_term(const Monomial& e, const Cyclotomic& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const
{
    if (vars_.size() != o.vars_.size() && !vars_.empty() && !o.vars_.empty())
        throw DomainError("polynomials in different numbers of variables");
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    check_compatible(o);
    if (vars_.empty())
        vars_ = o.vars_;
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    check_compatible(o);
    if (vars_.empty())
        vars_ = o.vars_;
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Cyclotomic& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_compatible(b);
    Polynomial r(a.vars_.empty() ? b.vars_ : a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Monomial e = ea;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::pow(int e) const
{
    if (e < 0)
        throw DomainError("negative polynomial power");
    Polynomial result(vars_, Cyclotomic(1)), base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::homogeneous_part(int d) const
{
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d)
            r.terms_.emplace(e, c);
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const
{
    if (images.size() != vars_.size())
        throw DomainError("substitution arity mismatch");
    std::vector<std::string> out_vars = images.empty() ? vars_ : images[0].vars();
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        powers[i].push_back(Polynomial(out_vars, Cyclotomic(1)));
    auto power = [&](std::size_t i, int e) -> const Polynomial& {
        while (static_cast<int>(powers[i].size()) <= e)
            powers[i].push_back(powers[i].back() * images[i]);
        return powers[i][e];
    };
    Polynomial r(out_vars);
    for (const auto& [e, c] : terms_) {
        Polynomial t(out_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                t = t * power(i, e[i]);
        r += t;
    }
    return r;
}

static bool lex_greater(const Monomial& a, const Monomial& b)
{
    return b < a;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& q) const
{
    if (q.is_zero())
        throw DomainError("division by the zero polynomial");
    auto lead = [](const Polynomial& p) {
        auto best = p.terms_.begin();
        for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it)
            if (lex_greater(it->first, best->first))
                best = it;
        return *best;
    };
    auto [lq_e, lq_c] = lead(q);
    Cyclotomic lq_inv = lq_c.inverse();
    Polynomial rem = *this;
    Polynomial quot(vars_.empty() ? q.vars_ : vars_);
    while (!rem.is_zero()) {
        auto [le, lc] = lead(rem);
        Monomial e = le;
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] -= lq_e[i];
            if (e[i] < 0)
                return std::nullopt;
        }
        Polynomial t = monomial(quot.vars_, e, lc * lq_inv);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

static std::string coeff_text(const Cyclotomic& c)
{
    if (c.is_rational())
        return c.rational_value().to_string();
    return c.to_string();
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_[i];
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        bool neg = c.is_rational() && c.rational_value().sign() < 0;
        std::string mag = coeff_text(neg ? -c : c);
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
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg)
    {
        throw ParseError("polynomial '" + s_ + "': " + msg);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr()
    {
        Polynomial acc(vars_);
        bool first = true;
        while (true) {
            int sign = 1;
            if (eat('-'))
                sign = -1;
            else if (eat('+'))
                sign = 1;
            else if (!first)
                break;
            Polynomial t = term();
            if (sign < 0)
                acc -= t;
            else
                acc += t;
            first = false;
            skip();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-'))
                break;
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial t = factor();
        while (true) {
            skip();
            if (eat('*')) {
                t = t * factor();
                continue;
            }
            if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
                t = t * factor();
                continue;
            }
            break;
        }
        return t;
    }

    long integer()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    int exponent()
    {
        if (!eat('^'))
            return 1;
        bool paren = eat('(');
        long e = integer();
        if (paren && !eat(')'))
            fail("expected ')'");
        return static_cast<int>(e);
    }

    Polynomial factor()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')'))
                fail("expected ')'");
            return p.pow(exponent());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            std::string num = s_.substr(start, pos_ - start);
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::size_t ds = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
                if (ds == pos_)
                    fail("expected denominator");
                num += "/" + s_.substr(ds, pos_ - ds);
            }
            return Polynomial(vars_, Cyclotomic(Rational::parse(num)));
        }
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const auto& v = vars_[i];
            if (s_.compare(pos_, v.size(), v) == 0 && v.size() > best_len) {
                best = static_cast<int>(i);
                best_len = v.size();
            }
        }
        if (best < 0)
            fail("unknown symbol at '" + s_.substr(pos_) + "'");
        pos_ += best_len;
        return Polynomial::variable(vars_, best).pow(exponent());
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& vars)
{
    return PolyParser(text, vars).parse();
}

std::vector<Cyclotomic> linear_coefficients(const Polynomial& alpha)
{
    if (alpha.is_zero())
        throw DomainError("zero linear form");
    std::vector<Cyclotomic> c(alpha.nvars(), Cyclotomic(0));
    for (const auto& [e, v] : alpha.terms()) {
        if (total_degree(e) != 1)
            throw DomainError("expected a linear form, got " + alpha.to_string());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] == 1)
                c[i] = v;
    }
    return c;
}

Polynomial normalize_linear(const Polynomial& alpha)
{
    auto c = linear_coefficients(alpha);
    for (const auto& v : c)
        if (!v.is_zero())
            return alpha * v.inverse();
    throw DomainError("zero linear form");
}

AdaptedCoordinates adapted_coordinates(const Polynomial& alpha)
{
    auto c = linear_coefficients(normalize_linear(alpha));
    AdaptedCoordinates a;
    while (c[a.slot].is_zero())
        ++a.slot;
    const auto& vars = alpha.vars();
    for (int j = 0; j < alpha.nvars(); ++j) {
        if (j != a.slot) {
            a.images.push_back(Polynomial::variable(vars, j));
            continue;
        }
        Polynomial img = Polynomial::variable(vars, j);
        for (int k = 0; k < alpha.nvars(); ++k)
            if (k != j && !c[k].is_zero())
                img -= Polynomial::variable(vars, k) * c[k];
        a.images.push_back(img);
    }
    return a;
}

int divisibility_order(const Polynomial& p, const Polynomial& alpha)
{
    AdaptedCoordinates a = adapted_coordinates(alpha);
    if (p.is_zero())
        return kInfiniteOrder;
    if (p.nvars() != alpha.nvars())
        throw DomainError("polynomial and linear form live in different rings");
    Polynomial q = p.substitute(a.images);
    int best = kInfiniteOrder;
    for (const auto& [e, c] : q.terms())
        best = std::min(best, e[a.slot]);
    return best;
}

} // namespace quasinv
