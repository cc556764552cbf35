#include "epp/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace epp {

Rational::Rational(const Integer& num, const Integer& den) : q_() {
    if (sgn(den) == 0) throw ParseError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

static bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational");
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer_token(text)) throw ParseError("invalid rational: '" + std::string(text) + "'");
        return Rational(Integer(std::string(text)));
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw ParseError("invalid rational: '" + std::string(text) + "'");
    return Rational(Integer(std::string(num)), Integer(std::string(den)));
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Integer p = num();
    const Integer q = den();
    const bool neg = sgn(p) < 0;
    if (neg) p = -p;
    Integer scaled = p * scale;
    Integer quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), q.get_mpz_t());
    if (2 * rem >= q) quot += 1;
    const Integer whole = quot / scale;
    const Integer frac = quot % scale;
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), static_cast<size_t>(digits) - fs.size(), '0');
    std::string out;
    if (neg && (sgn(whole) != 0 || sgn(frac) != 0)) out += '-';
    out += whole.get_str();
    out += '.';
    out += fs;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational rising_factorial(const Rational& x, int k, const Rational& step) {
    Rational out(1);
    Rational factor = x;
    for (int i = 0; i < k; ++i) {
        out *= factor;
        factor += step;
    }
    return out;
}

Rational falling_factorial(const Rational& x, int k, const Rational& step) {
    Rational out(1);
    Rational factor = x;
    for (int i = 0; i < k; ++i) {
        out *= factor;
        factor -= step;
    }
    return out;
}

Rational binomial(const Rational& x, int k) {
    return falling_factorial(x, k) / Rational(factorial(static_cast<unsigned long>(k)));
}

Integer binomial_int(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Rational pow(const Rational& base, unsigned long e) {
    Rational out(1);
    Rational b = base;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

} // namespace epp
