#pragma once

#include <algorithm>
#include <optional>

#include "ineqcert/rational.hpp"

namespace ineq {

// Positive width target for enclosure refinement.
struct Precision {
    Rational epsilon;

    explicit Precision(Rational eps) : epsilon(std::move(eps)) {
        if (epsilon.sign() <= 0)
            throw Error(ErrorKind::DomainError, "precision must be positive");
    }

    // 10^-12, far below any certificate margin in the corpus.
    static Precision standard() { return Precision(pow10(12)); }
    static Precision pow10_inv(unsigned k) { return Precision(pow10(k)); }

private:
    static Rational pow10(unsigned k) {
        BigInt s = 1;
        for (unsigned i = 0; i < k; ++i) s *= 10;
        return Rational(BigInt(1), s);
    }
};

// Closed interval with exact rational endpoints. Every operation returns an
// enclosure of the exact image set.
struct RatInterval {
    Rational lo;
    Rational hi;

    RatInterval() = default;
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw Error(ErrorKind::DomainError, "interval with lo > hi");
    }
    static RatInterval point(const Rational& r) { return RatInterval(r, r); }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& r) const { return lo <= r && r <= hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }

    bool operator==(const RatInterval& o) const { return lo == o.lo && hi == o.hi; }
};

inline RatInterval interval_add(const RatInterval& x, const RatInterval& y) {
    return RatInterval(x.lo + y.lo, x.hi + y.hi);
}

inline RatInterval interval_sub(const RatInterval& x, const RatInterval& y) {
    return RatInterval(x.lo - y.hi, x.hi - y.lo);
}

inline RatInterval interval_neg(const RatInterval& x) {
    return RatInterval(-x.hi, -x.lo);
}

inline RatInterval interval_mul(const RatInterval& x, const RatInterval& y) {
    Rational p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo, p4 = x.hi * y.hi;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return RatInterval(lo, hi);
}

inline RatInterval interval_div(const RatInterval& x, const RatInterval& y) {
    if (y.contains_zero())
        throw Error(ErrorKind::DivisionByIntervalContainingZero, "denominator interval contains zero");
    return interval_mul(x, RatInterval(y.hi.reciprocal(), y.lo.reciprocal()));
}

enum class IntervalOp { Add, Sub, Mul, Div };

inline RatInterval interval_arith(IntervalOp op, const RatInterval& x, const RatInterval& y) {
    switch (op) {
        case IntervalOp::Add: return interval_add(x, y);
        case IntervalOp::Sub: return interval_sub(x, y);
        case IntervalOp::Mul: return interval_mul(x, y);
        case IntervalOp::Div: return interval_div(x, y);
    }
    throw Error(ErrorKind::DomainError, "bad interval op");
}

// Floor of the integer q-th root of n >= 0.
inline BigInt integer_root_floor(const BigInt& n, unsigned q) {
    if (n < 0) throw Error(ErrorKind::NegativeRadicand, "integer root of negative");
    if (n == 0 || n == 1 || q == 1) return n;
    BigInt lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, q) <= n) hi <<= 1;
    // invariant: lo^q <= n < hi^q
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) >> 1;
        if (boost::multiprecision::pow(mid, q) <= n) lo = mid;
        else hi = mid;
    }
    return lo;
}

// Exact rational q-th root of t >= 0 when one exists.
inline std::optional<Rational> rational_root_exact(const Rational& t, unsigned q) {
    if (t.sign() < 0) return std::nullopt;
    BigInt rn = integer_root_floor(t.numerator(), q);
    if (boost::multiprecision::pow(rn, q) != t.numerator()) return std::nullopt;
    BigInt rd = integer_root_floor(t.denominator(), q);
    if (boost::multiprecision::pow(rd, q) != t.denominator()) return std::nullopt;
    return Rational(rn, rd);
}

namespace detail {

// Enclosure of t^(1/q) for a single rational t >= 0, width <= eps.
// Bisection on s^q vs t; endpoints stay on the safe side by construction.
inline RatInterval root_point_enclosure(const Rational& t, unsigned q, const Rational& eps) {
    if (auto exact = rational_root_exact(t, q)) return RatInterval::point(*exact);
    Rational lo(0), hi = std::max(Rational(1), t);
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / Rational(2);
        if (mid.pow(static_cast<long>(q)) <= t) lo = mid;
        else hi = mid;
    }
    return RatInterval(lo, hi);
}

} // namespace detail

// Enclosure of { t^(1/q) : t in x }. For even q requires x.lo >= 0; odd q
// accepts negative inputs (odd roots are defined and monotone on all of R).
inline RatInterval interval_root(const RatInterval& x, unsigned q, const Precision& prec) {
    if (q == 0) throw Error(ErrorKind::DomainError, "0th root");
    if (q == 1) return x;
    if (q % 2 == 0 && x.lo.sign() < 0)
        throw Error(ErrorKind::NegativeRadicand, "even root of interval with negative lower bound");
    Rational eps = prec.epsilon / Rational(2);
    auto one_endpoint = [&](const Rational& t) -> RatInterval {
        if (t.sign() >= 0) return detail::root_point_enclosure(t, q, eps);
        RatInterval r = detail::root_point_enclosure(-t, q, eps);
        return RatInterval(-r.hi, -r.lo);
    };
    RatInterval a = one_endpoint(x.lo);
    RatInterval b = one_endpoint(x.hi);
    return RatInterval(a.lo, b.hi);  // t^(1/q) is monotone increasing
}

// Enclosure of x^(p/q). Root first, then integer power; both steps are
// monotonicity-aware so the result is the exact image up to root precision.
inline RatInterval interval_pow(const RatInterval& x, long p, unsigned q, const Precision& prec) {
    if (q == 0) throw Error(ErrorKind::DomainError, "exponent with zero denominator");
    if (p == 0) return RatInterval(Rational(1), Rational(1));
    if (q % 2 == 0 && x.lo.sign() < 0)
        throw Error(ErrorKind::NegativeRadicand, "even root of negative interval");
    if (p < 0 && x.contains_zero())
        throw Error(ErrorKind::ZeroToNegativePower, "negative power of interval containing zero");

    RatInterval base = q == 1 ? x : interval_root(x, q, prec);

    unsigned long e = p < 0 ? static_cast<unsigned long>(-(p + 1)) + 1ul
                            : static_cast<unsigned long>(p);
    Rational alo = base.lo.pow(static_cast<long>(e));
    Rational ahi = base.hi.pow(static_cast<long>(e));
    RatInterval powed = [&] {
        if (e % 2 == 1) return RatInterval(alo, ahi);
        if (base.contains_zero()) return RatInterval(Rational(0), std::max(alo, ahi));
        if (base.lo.sign() >= 0) return RatInterval(alo, ahi);
        return RatInterval(ahi, alo);
    }();

    if (p < 0) {
        if (powed.contains_zero())
            throw Error(ErrorKind::ZeroToNegativePower, "reciprocal of interval containing zero");
        return RatInterval(powed.hi.reciprocal(), powed.lo.reciprocal());
    }
    return powed;
}

} // namespace ineq
