#pragma once

#include <optional>
#include <string>

#include "ineqcert/scalar.hpp"

namespace ineq {

// One end of a domain: an exact scalar or an infinity.
struct Endpoint {
    std::optional<Scalar> value;  // nullopt = infinite
    bool open = true;             // infinite endpoints are always open

    bool is_infinite() const { return !value.has_value(); }
};

// Interval of the real line with exactly representable endpoints.
struct Domain {
    Endpoint lo;
    Endpoint hi;

    static Domain open(Scalar a, Scalar b) {
        return make(Endpoint{std::move(a), true}, Endpoint{std::move(b), true});
    }
    static Domain closed(Scalar a, Scalar b) {
        return make(Endpoint{std::move(a), false}, Endpoint{std::move(b), false});
    }
    static Domain interval(Scalar a, bool a_open, Scalar b, bool b_open) {
        return make(Endpoint{std::move(a), a_open}, Endpoint{std::move(b), b_open});
    }
    static Domain ray_above(Scalar a, bool a_open) {
        return make(Endpoint{std::move(a), a_open}, Endpoint{std::nullopt, true});
    }
    static Domain ray_below(Scalar b, bool b_open) {
        return make(Endpoint{std::nullopt, true}, Endpoint{std::move(b), b_open});
    }
    static Domain whole_line() {
        return make(Endpoint{std::nullopt, true}, Endpoint{std::nullopt, true});
    }
    static Domain make(Endpoint lo, Endpoint hi) {
        if (lo.value && hi.value && !(*lo.value < *hi.value))
            throw Error(ErrorKind::DomainError, "domain endpoints out of order");
        Domain d;
        d.lo = std::move(lo);
        d.hi = std::move(hi);
        return d;
    }

    bool contains(const Scalar& x) const {
        if (lo.value) {
            int c = (x - *lo.value).sign();
            if (c < 0 || (c == 0 && lo.open)) return false;
        }
        if (hi.value) {
            int c = (x - *hi.value).sign();
            if (c > 0 || (c == 0 && hi.open)) return false;
        }
        return true;
    }

    // Strictly between the endpoints.
    bool contains_in_interior(const Scalar& x) const {
        if (lo.value && (x - *lo.value).sign() <= 0) return false;
        if (hi.value && (x - *hi.value).sign() >= 0) return false;
        return true;
    }

    bool is_bounded() const { return lo.value && hi.value; }

    std::string str() const {
        std::string s = lo.open ? "(" : "[";
        s += lo.value ? lo.value->str() : "-inf";
        s += ", ";
        s += hi.value ? hi.value->str() : "inf";
        s += hi.open ? ")" : "]";
        return s;
    }

    bool operator==(const Domain& o) const {
        auto end_eq = [](const Endpoint& a, const Endpoint& b) {
            if (a.open != b.open) return false;
            if (a.value.has_value() != b.value.has_value()) return false;
            return !a.value || *a.value == *b.value;
        };
        return end_eq(lo, o.lo) && end_eq(hi, o.hi);
    }
};

} // namespace ineq
