#ifndef PMC_RATIONAL_HPP
#define PMC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "pmc/errors.hpp"

namespace pmc {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Every probability in the library is one of these; there is
/// no floating point anywhere on a result path.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den) {
        if (den == 0) throw ValidationError("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : value_(n) {}
    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }
    explicit Rational(unsigned long n) : value_(mpz_class(n)) {}

    const mpz_class& num() const { return value_.get_num(); }
    const mpz_class& den() const { return value_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.value_ == 0) throw ValidationError("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    /// "3/4", or bare "3" when the denominator is 1.
    std::string str() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_str();
    }

    /// Always "p/q", including "0/1" and "1/1"; report and CLI format.
    std::string fraction_str() const {
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    double to_double() const { return value_.get_d(); }

private:
    mpq_class value_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// Builds a rational out of a 64-bit numerator and a power-of-two scale;
/// used for exact pseudo-random draws in [0,1).
inline Rational rational_from_u64_scaled(std::uint64_t n, unsigned bits) {
    mpz_class num;
    mpz_import(num.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    mpz_class den = 1;
    den <<= bits;
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

/// Accepts "p/q", "p", and decimal literals like "0.25" (converted exactly).
/// Returns nullopt on malformed input so callers can attach positions.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::string digits;
    auto all_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string body = text;
    bool negative = false;
    if (body[0] == '-') {
        negative = true;
        body = body.substr(1);
    }
    Rational result;
    auto slash = body.find('/');
    auto dot = body.find('.');
    if (slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        mpz_class n(num), d(den);
        if (d == 0) return std::nullopt;
        mpq_class q(n, d);
        q.canonicalize();
        result = Rational(q);
    } else if (dot != std::string::npos) {
        std::string whole = body.substr(0, dot);
        std::string frac = body.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
        mpz_class scaled(whole + frac);
        mpz_class den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        mpq_class q(scaled, den);
        q.canonicalize();
        result = Rational(q);
    } else {
        if (!all_digits(body)) return std::nullopt;
        result = Rational(mpz_class(body));
    }
    return negative ? -result : result;
}

/// A rational constrained to [0,1].
class Prob {
public:
    Prob() : value_(0) {}
    explicit Prob(Rational r) : value_(std::move(r)) {
        if (value_ < Rational(0) || value_ > Rational(1))
            throw ValidationError("probability " + value_.str() + " outside [0,1]");
    }
    Prob(long num, long den) : Prob(Rational(num, den)) {}

    const Rational& value() const { return value_; }
    std::string str() const { return value_.str(); }
    std::string fraction_str() const { return value_.fraction_str(); }

    friend bool operator==(const Prob& a, const Prob& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Prob& a, const Prob& b) { return a.value_ != b.value_; }
    friend bool operator<(const Prob& a, const Prob& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Prob& a, const Prob& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Prob& a, const Prob& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Prob& a, const Prob& b) { return a.value_ >= b.value_; }

private:
    Rational value_;
};

}  // namespace pmc

#endif
