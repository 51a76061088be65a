#pragma once

#include <cmath>
#include <cstdint>

namespace cosep {

// Floating value with an explicit wide exponent: value = m * 2^e with
// |m| in [0.5, 1) (m = 0 for zero). Keeps double-precision relative accuracy
// while being immune to overflow/underflow of the factorial-sized magnitudes
// that appear in the counting series.
struct ScaledReal {
    double m = 0.0;
    std::int64_t e = 0;

    static ScaledReal zero() { return {}; }

    static ScaledReal from_double(double x) {
        if (x == 0.0) return {};
        int ex;
        double mm = std::frexp(x, &ex);
        return {mm, ex};
    }

    bool is_zero() const { return m == 0.0; }

    friend ScaledReal operator*(ScaledReal a, ScaledReal b) {
        if (a.is_zero() || b.is_zero()) return {};
        int ex;
        double mm = std::frexp(a.m * b.m, &ex);
        return {mm, a.e + b.e + ex};
    }

    friend ScaledReal operator/(ScaledReal a, ScaledReal b) {
        if (a.is_zero()) return {};
        int ex;
        double mm = std::frexp(a.m / b.m, &ex);
        return {mm, a.e - b.e + ex};
    }

    friend ScaledReal operator+(ScaledReal a, ScaledReal b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.e < b.e) std::swap(a, b);
        std::int64_t d = a.e - b.e;
        if (d > 1100) return a;  // b is below one ulp of a
        int ex;
        double mm = std::frexp(a.m + std::ldexp(b.m, static_cast<int>(-d)), &ex);
        if (mm == 0.0) return {};
        return {mm, a.e + ex};
    }

    friend ScaledReal operator-(ScaledReal a, ScaledReal b) { return a + ScaledReal{-b.m, b.e}; }

    // natural log of the absolute value; -inf for zero
    double log_abs() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return std::log(std::fabs(m)) + static_cast<double>(e) * 0.6931471805599453094;
    }

    int sign() const { return m > 0 ? 1 : (m < 0 ? -1 : 0); }

    // plain double; +-inf when out of range, 0 on underflow
    double to_double() const {
        if (is_zero()) return 0.0;
        if (e > 1100) return m > 0 ? HUGE_VAL : -HUGE_VAL;
        if (e < -1200) return 0.0;
        return std::ldexp(m, static_cast<int>(e));
    }
};

}  // namespace cosep
