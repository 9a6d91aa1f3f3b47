#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Every intersection number in the library is a Rational. Values are kept in
 * lowest terms with a positive denominator, so structural equality is
 * numeric equality.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace delpezzo {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    /// Parses "n" or "n/d" with an optional leading sign on n.
    static Rational parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        return Rational(parse_int(trim(text.substr(0, slash))),
                        parse_int(trim(text.substr(slash + 1))));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    /// Numerator as a machine integer; throws when not an integer or out of range.
    std::int64_t to_int64() const {
        if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
        if (num_ > BigInt(INT64_MAX) || num_ < BigInt(INT64_MIN))
            throw std::overflow_error("rational " + str() + " does not fit in 64 bits");
        return static_cast<std::int64_t>(num_);
    }

    /// "n" when the denominator is 1, otherwise "n/d".
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static BigInt parse_int(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer literal");
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("malformed integer literal '" + std::string(s) + "'");
        BigInt v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed integer literal '" + std::string(s) + "'");
            v = v * 10 + (s[i] - '0');
        }
        return neg ? BigInt(-v) : v;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

/// Exact integer power p^e for e >= 0.
inline BigInt ipow(const BigInt& base, std::int64_t e) {
    if (e < 0) throw std::domain_error("negative exponent");
    BigInt result = 1;
    for (std::int64_t i = 0; i < e; ++i) result *= base;
    return result;
}

}  // namespace delpezzo
