#include "pentatile/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <stdexcept>
#include <vector>

namespace pentatile {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num) / mpq_class(den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q_.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q_.get_mpq_t()), e);
    return Rational(r);  // already canonical: powers of coprime values stay coprime
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    Integer num = numerator(), den = denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

int count_significant_digits(std::string_view digits) {
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return 0;
    std::size_t last = digits.find_last_not_of('0');
    return static_cast<int>(last - first + 1);
}

}  // namespace

Rational Rational::parse(std::string_view text, int max_decimal_digits) {
    if (text.empty()) throw std::domain_error("Rational::parse: empty string");

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den))
            throw std::domain_error("Rational::parse: malformed fraction");
        Rational r(Integer(std::string(num), 10), Integer(std::string(den), 10));
        return negative ? -r : r;
    }

    // split off exponent
    long exp10 = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string es(text.substr(e + 1));
        if (es.empty()) throw std::domain_error("Rational::parse: malformed exponent");
        std::size_t pos = 0;
        exp10 = std::stol(es, &pos);
        if (pos != es.size()) throw std::domain_error("Rational::parse: malformed exponent");
        text = text.substr(0, e);
    }

    std::string digits;
    long frac_len = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot), fp = text.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw std::domain_error("Rational::parse: malformed number");
        if ((!ip.empty() && !is_digits(ip)) || (!fp.empty() && !is_digits(fp)))
            throw std::domain_error("Rational::parse: malformed number");
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!is_digits(text)) throw std::domain_error("Rational::parse: malformed number");
        digits = std::string(text);
    }
    if (digits.empty()) throw std::domain_error("Rational::parse: malformed number");

    if (count_significant_digits(digits) > max_decimal_digits)
        throw std::domain_error("Rational::parse: decimal literal exceeds " +
                                std::to_string(max_decimal_digits) +
                                " significant digits; pass an exact fraction p/q");

    Integer num(digits, 10);
    Rational r(num);
    long e = exp10 - frac_len;
    Integer p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0)
        r *= Rational(p10);
    else
        r /= Rational(p10);
    return negative ? -r : r;
}

std::string Rational::to_fraction_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_decimal_string(int significant_digits) const {
    mpfr_t x;
    mpfr_init2(x, 128);
    mpfr_set_q(x, q_.get_mpq_t(), MPFR_RNDN);
    char buf[128];
    std::string fmt = "%." + std::to_string(significant_digits) + "Rg";
    mpfr_snprintf(buf, sizeof buf, fmt.c_str(), x);
    mpfr_clear(x);
    return buf;
}

Integer binomial_big(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

Integer factorial_big(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace pentatile
