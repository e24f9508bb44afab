#include "pentatile/alpha_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace pentatile {

AlphaPoly AlphaPoly::monomial(std::size_t degree, Rational coeff) {
    std::vector<Rational> c(degree + 1);
    c[degree] = std::move(coeff);
    return AlphaPoly(std::move(c));
}

Rational AlphaPoly::eval(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

BigFloat AlphaPoly::eval(const BigFloat& x) const {
    BigFloat acc(x.precision());
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + BigFloat::from(c_[i], x.precision());
    return acc;
}

AlphaPoly AlphaPoly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return AlphaPoly(std::move(c));
}

AlphaPoly operator+(const AlphaPoly& a, const AlphaPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return AlphaPoly(std::move(c));
}

AlphaPoly operator-(const AlphaPoly& a, const AlphaPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return AlphaPoly(std::move(c));
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
    if (a.is_zero() || b.is_zero()) return AlphaPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return AlphaPoly(std::move(c));
}

AlphaPoly AlphaPoly::scaled(const Rational& k) const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * k;
    return AlphaPoly(std::move(c));
}

AlphaPoly AlphaPoly::divide_linear(const Rational& root, Rational& remainder) const {
    if (c_.empty()) {
        remainder = Rational();
        return AlphaPoly();
    }
    std::vector<Rational> q(c_.size() - 1);
    Rational carry = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        if (i < q.size()) q[i] = carry;
        carry = c_[i] + carry * root;
    }
    remainder = carry;
    return AlphaPoly(std::move(q));
}

std::string AlphaPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (os.tellp() > 0) os << " + ";
        os << c_[i].to_fraction_string();
        if (i > 0) os << "*a^" << i;
    }
    return os.str();
}

namespace {

// coefficient of t^i in (1 - t)^{-m}
Integer neg_binomial_coeff(long m, long i) {
    if (m == 0) return Integer(i == 0 ? 1 : 0);
    return binomial_big(static_cast<unsigned long>(m + i - 1), i);
}

}  // namespace

AlphaPoly residue_poly(long l, long m, long n) {
    if (l < 0 || m < 0 || n < 0) throw std::domain_error("residue_poly: negative parameter");
    const long top = l - m - n + 1;
    if (top < 0) return AlphaPoly();
    std::vector<Rational> c(static_cast<std::size_t>(top) + 1);
    for (long i = 0; i <= top; ++i)
        c[static_cast<std::size_t>(i)] = Rational(neg_binomial_coeff(m, i) * neg_binomial_coeff(n, top - i));
    return AlphaPoly(std::move(c));
}

}  // namespace pentatile
