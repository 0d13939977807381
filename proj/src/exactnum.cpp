#include "sizeramsey/exactnum.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "sizeramsey/errors.hpp"

namespace sizeramsey {

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    if (pos == text.size()) return false;
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    BigInt num;
    BigInt den = 1;
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) throw ParseError("not a rational: '" + std::string(text) + "'");
    } else {
        const auto den_text = text.substr(slash + 1);
        if (!parse_integer(text.substr(0, slash), num) || den_text.empty() ||
            den_text[0] == '-' || den_text[0] == '+' || !parse_integer(den_text, den)) {
            throw ParseError("not a rational: '" + std::string(text) + "'");
        }
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

BigInt Rational::floor() const {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return out;
}

BigInt Rational::ceil() const {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return out;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::approx(int significant_digits) const {
    mpf_class f(value_, 256);
    std::vector<char> buffer(static_cast<std::size_t>(significant_digits) + 64);
    const int written = gmp_snprintf(buffer.data(), buffer.size(), "%.*Fg", significant_digits,
                                     f.get_mpf_t());
    if (written < 0) return {};
    return std::string(buffer.data());
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.sign() == 0) throw std::domain_error("division by zero");
    value_ /= other.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.value_ = -out.value_;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

BigInt binom(long n, long k) {
    if (n < 0) throw std::invalid_argument("binom: negative n");
    if (k < 0 || k > n) return 0;
    if (2 * k > n) k = n - k;
    BigInt out = 1;
    for (long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;  // exact: out holds C(n-k+i, i)
    }
    return out;
}

BigInt falling_factorial(long s, long k) {
    if (s < 0 || k < 0) throw std::invalid_argument("falling_factorial: negative argument");
    if (k > s) return 0;
    BigInt out = 1;
    for (long i = 0; i < k; ++i) out *= s - i;
    return out;
}

Rational rat_normalize(const BigInt& p, const BigInt& q) {
    return Rational(p, q);
}

}  // namespace sizeramsey
