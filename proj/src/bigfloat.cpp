#include "pentatile/bigfloat.hpp"

#include <stdexcept>

namespace pentatile {

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

BigFloat BigFloat::from(const Rational& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.x_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(const Integer& n, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_z(r.x_, n.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(double d, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.x_, d, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(long n, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.x_, n, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::binop(const BigFloat& a, const BigFloat& b, TernaryFn fn) {
    BigFloat r(std::max(a.precision(), b.precision()));
    fn(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log() const {
    if (sign() <= 0) throw std::domain_error("BigFloat::log: nonpositive argument");
    BigFloat r(precision());
    mpfr_log(r.x_, x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_ui(unsigned long e) const {
    BigFloat r(precision());
    mpfr_pow_ui(r.x_, x_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow(const Rational& e) const {
    if (sign() <= 0) throw std::domain_error("BigFloat::pow: nonpositive base");
    BigFloat ex = BigFloat::from(e, precision());
    BigFloat r(precision());
    mpfr_pow(r.x_, x_, ex.x_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int significant_digits) const {
    char buf[160];
    std::string fmt = "%." + std::to_string(significant_digits) + "Rg";
    mpfr_snprintf(buf, sizeof buf, fmt.c_str(), x_);
    return buf;
}

long matching_bits(const BigFloat& a, const BigFloat& b) {
    const long cap = std::min(a.precision(), b.precision());
    BigFloat diff = (a - b).abs();
    if (diff.is_zero()) return cap;
    BigFloat scale = a.abs();
    if (scale.is_zero()) return 0;
    const long bits = scale.exponent2() - diff.exponent2();
    return std::min(std::max(bits, 0L), cap);
}

}  // namespace pentatile
