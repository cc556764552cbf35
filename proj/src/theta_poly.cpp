#include "epp/theta_poly.hpp"

#include <ostream>

namespace epp {

ThetaPoly::ThetaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void ThetaPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ThetaPoly ThetaPoly::constant(const Rational& c) {
    return ThetaPoly(std::vector<Rational>{c});
}

ThetaPoly ThetaPoly::theta() {
    return ThetaPoly(std::vector<Rational>{Rational(0), Rational(1)});
}

ThetaPoly ThetaPoly::rising(const Rational& offset, int k, const Rational& step) {
    ThetaPoly out = constant(Rational(1));
    for (int i = 0; i < k; ++i) {
        const Rational c = offset + Rational(i) * step;
        out = out * ThetaPoly(std::vector<Rational>{c, Rational(1)});
    }
    return out;
}

const Rational& ThetaPoly::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
}

Rational ThetaPoly::eval(const Rational& theta) const {
    Rational out(0);
    for (size_t i = c_.size(); i-- > 0;) out = out * theta + c_[i];
    return out;
}

ThetaPoly ThetaPoly::shifted(const Rational& delta) const {
    // Horner form: p(x+delta) = (((c_d)(x+delta) + c_{d-1})(x+delta) + ...)
    ThetaPoly out;
    const ThetaPoly lin(std::vector<Rational>{delta, Rational(1)});
    for (size_t i = c_.size(); i-- > 0;) out = out * lin + constant(c_[i]);
    return out;
}

ThetaPoly ThetaPoly::backward_difference(const Rational& step) const {
    return *this - shifted(-step);
}

std::pair<ThetaPoly, Rational> ThetaPoly::divide_linear(const Rational& a) const {
    if (c_.empty()) return {ThetaPoly{}, Rational(0)};
    // synthetic division at the root -a
    std::vector<Rational> q(c_.size() - 1, Rational(0));
    Rational carry = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c_[i] - a * carry;
    }
    return {ThetaPoly(std::move(q)), carry};
}

ThetaPoly ThetaPoly::operator-() const {
    std::vector<Rational> c = c_;
    for (auto& x : c) x = -x;
    return ThetaPoly(std::move(c));
}

ThetaPoly operator+(const ThetaPoly& a, const ThetaPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return ThetaPoly(std::move(c));
}

ThetaPoly operator-(const ThetaPoly& a, const ThetaPoly& b) {
    return a + (-b);
}

ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return ThetaPoly{};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return ThetaPoly(std::move(c));
}

ThetaPoly operator*(const ThetaPoly& a, const Rational& s) {
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= s;
    return ThetaPoly(std::move(c));
}

std::string ThetaPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) out += "-";
        const Rational mag = c.abs();
        if (i == 0) {
            out += mag.str();
        } else {
            if (mag != Rational(1)) out += mag.str() + "*";
            out += i == 1 ? "theta" : "theta^" + std::to_string(i);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ThetaPoly& p) {
    return os << p.str();
}

} // namespace epp
