#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ecom {

/// Exact rational angle as a fraction of a full turn, reduced, in [0, 1).
/// No floating point anywhere in this module.
struct Angle {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Angle of(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::invalid_argument("Angle: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        num %= den;
        if (num < 0) num += den;
        std::int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        return Angle{num, den};
    }

    Angle operator+(const Angle& o) const {
        __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
        __int128 d = static_cast<__int128>(den) * o.den;
        n %= d;
        if (n < 0) n += d;
        __int128 a = n, b = d;  // 128-bit gcd keeps everything exact
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        if (d > INT64_MAX) throw std::overflow_error("Angle: denominator overflow");
        return Angle{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
    }

    Angle operator-() const { return Angle::of(-num, den); }
    Angle operator-(const Angle& o) const { return *this + (-o); }
    Angle doubled() const { return *this + *this; }

    bool operator==(const Angle& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Angle& o) const { return !(*this == o); }
    bool is_zero() const { return num == 0; }

    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Element of O(2): a rotation R_theta or a reflection A R_theta, with the
/// angle measured in turns.  A R_theta A = R_{-theta}.
struct O2Element {
    bool reflect = false;
    Angle angle;

    static O2Element rotation(std::int64_t num, std::int64_t den) {
        return {false, Angle::of(num, den)};
    }
    static O2Element reflection(std::int64_t num, std::int64_t den) {
        return {true, Angle::of(num, den)};
    }
    static O2Element identity() { return {false, Angle{0, 1}}; }

    bool operator==(const O2Element& o) const {
        return reflect == o.reflect && angle == o.angle;
    }

    std::string to_string() const {
        return (reflect ? "A*R(" : "R(") + angle.to_string() + ")";
    }
};

/// Semidirect product law: (r1, t1)(r2, t2) = (r1 xor r2, t2 + (-1)^{r2} t1).
inline O2Element o2_multiply(const O2Element& a, const O2Element& b) {
    Angle t = b.reflect ? (b.angle - a.angle) : (b.angle + a.angle);
    return {a.reflect != b.reflect, t};
}

inline O2Element o2_inverse(const O2Element& a) {
    if (a.reflect) return a;  // reflections are involutions
    return {false, -a.angle};
}

/// [a, b] = a^{-1} b^{-1} a b.
inline O2Element o2_commutator(const O2Element& a, const O2Element& b) {
    return o2_multiply(o2_multiply(o2_inverse(a), o2_inverse(b)), o2_multiply(a, b));
}

}  // namespace ecom
