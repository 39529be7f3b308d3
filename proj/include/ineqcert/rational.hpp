#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "ineqcert/error.hpp"

namespace ineq {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator; zero is 0/1. The backing type canonicalizes on construction,
// so the invariant holds by construction everywhere.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long n, long d) { init(BigInt(n), BigInt(d)); }
    Rational(const BigInt& n, const BigInt& d) { init(n, d); }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(Raw{}, -v_); }
    Rational operator+(const Rational& o) const { return Rational(Raw{}, v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(Raw{}, v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(Raw{}, v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
        return Rational(Raw{}, v_ / o.v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        if (v_ < o.v_) return std::strong_ordering::less;
        if (v_ > o.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "reciprocal of zero");
        return Rational(denominator(), numerator());
    }

    // Integer exponent; 0^0 = 1, 0^negative is an error.
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw Error(ErrorKind::ZeroToNegativePower, "0 raised to a negative power");
            return Rational(0);
        }
        Rational base = e < 0 ? reciprocal() : *this;
        unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                                : static_cast<unsigned long>(e);
        Rational acc(1);
        while (k) {
            if (k & 1ul) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    // Largest integer <= value.
    BigInt floor() const {
        BigInt q = numerator() / denominator();
        if (sign() < 0 && q * denominator() != numerator()) q -= 1;
        return q;
    }

    // "p/q", or just "p" for integers.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    // Fixed-point decimal with the given number of fractional digits,
    // truncated toward zero. Used only for report/CSV output.
    std::string decimal(unsigned digits) const;

    // Parses "p", "-p", or "p/q". Throws SyntaxError on anything else.
    static Rational parse(const std::string& text);

    double to_double() const { return v_.convert_to<double>(); }

private:
    struct Raw {};
    Rational(Raw, boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    void init(const BigInt& n, const BigInt& d) {
        if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
        v_ = boost::multiprecision::cpp_rational(n, d);
    }

    boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

inline std::string Rational::decimal(unsigned digits) const {
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    BigInt n = numerator() * scale;
    BigInt scaled = n / denominator();  // truncates toward zero
    bool neg = scaled < 0;
    BigInt a = neg ? BigInt(-scaled) : scaled;
    std::string ds = a.str();
    if (ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    std::string out = ds.substr(0, ds.size() - digits);
    if (digits > 0) out += "." + ds.substr(ds.size() - digits);
    return (neg ? "-" : "") + out;
}

inline Rational Rational::parse(const std::string& text) {
    auto fail = [&] { throw Error(ErrorKind::SyntaxError, "not a rational literal: '" + text + "'"); };
    if (text.empty()) fail();
    std::size_t slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) fail();
            return Rational(BigInt(text));
        }
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) fail();
        return Rational(BigInt(num), BigInt(den));
    } catch (const std::exception&) {
        fail();
    }
    return Rational();  // unreachable
}

} // namespace ineq
