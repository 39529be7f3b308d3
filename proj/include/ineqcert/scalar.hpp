#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ineqcert/interval.hpp"
#include "ineqcert/rational.hpp"

namespace ineq {

// Element a + b*sqrt(d) of a real quadratic extension Q(sqrt(d)).
// d is square-free and >= 2; b may be zero (the value is then rational).
struct QuadExt {
    Rational a;
    Rational b;
    std::int64_t d = 2;
};

// Exact sign of a + b*sqrt(d), decided by comparing a^2 against b^2*d.
inline int quadext_sign(const QuadExt& v) {
    int sa = v.a.sign(), sb = v.b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: |a| vs |b|*sqrt(d) <=> a^2 vs b^2*d
    Rational a2 = v.a * v.a;
    Rational b2d = v.b * v.b * Rational(v.d);
    if (a2 == b2d) return 0;  // impossible for square-free d unless a=b=0, kept for safety
    return a2 > b2d ? sa : sb;
}

namespace detail {

// n = s^2 * m with m square-free, by trial division. Returns nullopt when the
// remaining cofactor exceeds the trial bound and square-freeness cannot be
// certified.
inline std::optional<std::pair<BigInt, BigInt>> squarefree_split(BigInt n) {
    if (n <= 0) return std::nullopt;
    BigInt s = 1, m = 1;
    for (BigInt p = 2; p * p <= n && p <= 100000; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) m *= p;
    }
    if (n == 1) return std::make_pair(s, m);
    BigInt r = integer_root_floor(n, 2);
    if (r * r == n) return std::make_pair(s * r, m);
    if (n <= 100000ul * 100000ul) return std::make_pair(s, m * n);  // remainder is prime
    return std::nullopt;
}

// n = s^3 * m with m cube-free (same caveats as squarefree_split).
inline std::optional<std::pair<BigInt, BigInt>> cubefree_split(BigInt n) {
    if (n <= 0) return std::nullopt;
    BigInt s = 1, m = 1;
    for (BigInt p = 2; p * p * p <= n && p <= 100000; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (unsigned i = 0; i + 2 < e; i += 3) s *= p;
        for (unsigned i = 0; i < e % 3; ++i) m *= p;
    }
    if (n == 1) return std::make_pair(s, m);
    BigInt r = integer_root_floor(n, 3);
    if (r * r * r == n) return std::make_pair(s * r, m);
    if (n <= BigInt(100000) * 100000 * 100000) return std::make_pair(s, m * n);
    return std::nullopt;
}

} // namespace detail

// Exact scalar: either a rational or an element of one quadratic extension
// Q(sqrt(d)). Arithmetic mixes rationals with a single active d; combining
// two distinct extensions raises NotExactlyRepresentable.
class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(const Rational& r) : a_(r), b_(0), d_(0) {}
    Scalar(long n) : a_(Rational(n)), b_(0), d_(0) {}
    Scalar(const QuadExt& q) : a_(q.a), b_(q.b), d_(q.d) { normalize(); check_d(); }
    static Scalar quad(Rational a, Rational b, std::int64_t d) {
        return Scalar(QuadExt{std::move(a), std::move(b), d});
    }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    const Rational& rat_part() const { return a_; }
    const Rational& quad_part() const { return b_; }
    std::int64_t radicand() const { return d_; }

    Rational as_rational() const {
        if (!is_rational())
            throw Error(ErrorKind::NotExactlyRepresentable, "value is not rational: " + str());
        return a_;
    }

    int sign() const {
        if (is_rational()) return a_.sign();
        return quadext_sign(QuadExt{a_, b_, d_});
    }

    Scalar operator-() const { return make(-a_, -b_, d_); }

    Scalar operator+(const Scalar& o) const {
        std::int64_t d = join(o);
        return make(a_ + o.a_, b_ + o.b_, d);
    }
    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        std::int64_t d = join(o);
        Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d == 0 ? 0 : d);
        Rational b = a_ * o.b_ + b_ * o.a_;
        return make(a, b, d);
    }

    Scalar operator/(const Scalar& o) const {
        if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "scalar division by zero");
        std::int64_t d = join(o);
        if (o.b_.is_zero()) return make(a_ / o.a_, b_ / o.a_, d);
        // multiply by the conjugate; the norm a^2 - b^2 d is nonzero for nonzero values
        Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
        Scalar conj = make(o.a_, -o.b_, d);
        Scalar num = *this * conj;
        return make(num.a_ / norm, num.b_ / norm, num.d_ == 0 ? d : num.d_);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const {
        return a_ == o.a_ && b_ == o.b_ && (b_.is_zero() || d_ == o.d_);
    }
    bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const Scalar& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const Scalar& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const Scalar& o) const { return (*this - o).sign() >= 0; }

    Scalar pow(long e) const {
        if (e == 0) return Scalar(Rational(1));
        Scalar base = *this;
        if (e < 0) {
            base = Scalar(Rational(1)) / base;
            e = -e;
        }
        Scalar acc{Rational(1)};
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1ul) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    // Exact square root when representable as a rational or in Q(sqrt(d)).
    Scalar sqrt() const;
    // Exact cube root when representable.
    Scalar cbrt() const;
    // q in {1,2,3,6}.
    Scalar root(unsigned q) const {
        switch (q) {
            case 1: return *this;
            case 2: return sqrt();
            case 3: return cbrt();
            case 6: return sqrt().cbrt();
        }
        throw Error(ErrorKind::UnsupportedExponent, "root index " + std::to_string(q));
    }

    // Rigorous enclosure; rationals get point intervals.
    RatInterval enclosure(const Precision& prec) const {
        if (is_rational()) return RatInterval::point(a_);
        RatInterval root = interval_root(RatInterval::point(Rational(d_)), 2, prec);
        return interval_add(RatInterval::point(a_),
                            interval_mul(RatInterval::point(b_), root));
    }

    std::string str() const {
        if (is_rational()) return a_.str();
        std::string rad = "sqrt(" + std::to_string(d_) + ")";
        std::string bp;
        if (b_ == Rational(1)) bp = rad;
        else if (b_ == Rational(-1)) bp = "-" + rad;
        else bp = b_.str() + "*" + rad;
        if (a_.is_zero()) return bp;
        if (b_.sign() > 0) return "(" + a_.str() + "+" + bp + ")";
        return "(" + a_.str() + bp + ")";
    }

private:
    static Scalar make(Rational a, Rational b, std::int64_t d) {
        Scalar s;
        s.a_ = std::move(a);
        s.b_ = std::move(b);
        s.d_ = d;
        s.normalize();
        return s;
    }

    void normalize() {
        if (b_.is_zero()) d_ = 0;
    }

    void check_d() const {
        if (d_ == 0) return;
        if (d_ < 2) throw Error(ErrorKind::DomainError, "radicand must be >= 2");
        auto split = detail::squarefree_split(BigInt(d_));
        if (!split || split->first != 1)
            throw Error(ErrorKind::DomainError, "radicand must be square-free");
    }

    // The common extension of two operands, or an error if they mix.
    std::int64_t join(const Scalar& o) const {
        if (d_ == 0) return o.d_;
        if (o.d_ == 0 || o.d_ == d_) return d_;
        throw Error(ErrorKind::NotExactlyRepresentable,
                    "mixing sqrt(" + std::to_string(d_) + ") with sqrt(" + std::to_string(o.d_) + ")");
    }

    Rational a_;       // rational part
    Rational b_;       // coefficient of sqrt(d_)
    std::int64_t d_;   // 0 when the value is rational
};

inline Scalar Scalar::sqrt() const {
    int s = sign();
    if (s < 0) throw Error(ErrorKind::NegativeRadicand, "square root of negative value " + str());
    if (s == 0) return Scalar(Rational(0));
    if (is_rational()) {
        // sqrt(n/m) = sqrt(n*m)/m
        BigInt nm = a_.numerator() * a_.denominator();
        auto split = detail::squarefree_split(nm);
        if (!split)
            throw Error(ErrorKind::NotExactlyRepresentable, "cannot certify square-free split of " + str());
        auto [sq, m] = *split;
        Rational coeff(sq, a_.denominator());
        if (m == 1) return Scalar(coeff);
        if (m > BigInt(std::numeric_limits<std::int64_t>::max()))
            throw Error(ErrorKind::NotExactlyRepresentable, "radicand too large: " + str());
        return Scalar::quad(Rational(0), coeff, m.convert_to<std::int64_t>());
    }
    // try (alpha + beta*sqrt(d))^2 = a + b*sqrt(d):
    //   alpha^2 + beta^2 d = a, 2 alpha beta = b
    // so alpha^2 and beta^2 d are roots of t^2 - a t + (b^2 d)/4.
    Rational disc = a_ * a_ - b_ * b_ * Rational(d_);
    if (disc.sign() >= 0) {
        if (auto sd = rational_root_exact(disc, 2)) {
            for (int pick = 0; pick < 2; ++pick) {
                Rational alpha2 = (a_ + (pick == 0 ? *sd : -*sd)) / Rational(2);
                if (alpha2.sign() < 0) continue;
                auto alpha = rational_root_exact(alpha2, 2);
                if (!alpha || alpha->is_zero()) continue;
                Rational beta = b_ / (Rational(2) * *alpha);
                Scalar cand = Scalar::quad(*alpha, beta, d_);
                if (cand * cand == *this && cand.sign() > 0) return cand;
                cand = -cand;
                if (cand * cand == *this && cand.sign() > 0) return cand;
            }
        }
    }
    // pure multiples of sqrt(d): (beta*sqrt(d))^2 = beta^2 d
    if (a_.is_zero()) {
        // value is b*sqrt(d) with b > 0; not a perfect square pattern above
        // fall through
    }
    throw Error(ErrorKind::NotExactlyRepresentable, "square root of " + str() + " not in the active field");
}

inline Scalar Scalar::cbrt() const {
    if (is_zero()) return Scalar(Rational(0));
    if (is_rational()) {
        bool neg = a_.sign() < 0;
        Rational v = neg ? -a_ : a_;
        BigInt nm2 = v.numerator() * v.denominator() * v.denominator();
        // cbrt(n/m) = cbrt(n*m^2)/m
        auto split = detail::cubefree_split(nm2);
        if (!split)
            throw Error(ErrorKind::NotExactlyRepresentable, "cannot certify cube-free split of " + str());
        auto [s, m] = *split;
        if (m != 1)
            throw Error(ErrorKind::NotExactlyRepresentable, "cube root of " + str() + " is irrational");
        Rational r(s, v.denominator());
        return Scalar(neg ? -r : r);
    }
    // (beta*sqrt(d))^3 = beta^3 d sqrt(d); handles endpoints like 3*sqrt(3) -> sqrt(3)
    if (a_.is_zero()) {
        Rational beta3 = b_ / Rational(d_);
        bool neg = beta3.sign() < 0;
        Rational v = neg ? -beta3 : beta3;
        BigInt nm2 = v.numerator() * v.denominator() * v.denominator();
        auto split = detail::cubefree_split(nm2);
        if (split && split->second == 1) {
            Rational beta(split->first, v.denominator());
            return Scalar::quad(Rational(0), neg ? -beta : beta, d_);
        }
    }
    throw Error(ErrorKind::NotExactlyRepresentable, "cube root of " + str() + " not representable");
}

} // namespace ineq
