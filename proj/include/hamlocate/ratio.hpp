#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hamlocate {

// Exact nonnegative rational for thresholds. All comparisons against counted
// quantities (edge counts, degrees, set sizes) cross-multiply in 128-bit so no
// floating point enters any accept/reject decision.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Ratio() = default;
    Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den <= 0) throw std::invalid_argument("Ratio: denominator must be positive");
        if (num < 0) throw std::invalid_argument("Ratio: negative value");
        normalize();
    }

    void normalize() {
        std::int64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return (double)num / (double)den; }

    Ratio operator*(const Ratio& o) const { return Ratio(num * o.num, den * o.den); }

    bool operator<(const Ratio& o) const {
        return (__int128)num * o.den < (__int128)o.num * den;
    }
    bool operator<=(const Ratio& o) const {
        return (__int128)num * o.den <= (__int128)o.num * den;
    }
    bool operator==(const Ratio& o) const { return num == o.num && den == o.den; }

    // Parse "3/20" or decimal "0.15" (up to 18 fractional digits) exactly.
    static Ratio parse(const std::string& s);
};

// a/b > c/d with b,d > 0 and a,c >= 0 (counts).
inline bool frac_gt(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return (__int128)a * d > (__int128)c * b;
}
inline bool frac_ge(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return (__int128)a * d >= (__int128)c * b;
}
inline bool frac_lt(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return (__int128)a * d < (__int128)c * b;
}

// count >= r * total, exactly.
inline bool count_ge(std::int64_t count, const Ratio& r, std::int64_t total) {
    return (__int128)count * r.den >= (__int128)r.num * total;
}
// count > r * total, exactly.
inline bool count_gt(std::int64_t count, const Ratio& r, std::int64_t total) {
    return (__int128)count * r.den > (__int128)r.num * total;
}

// |e1/c1 - e2/c2| < eps, exactly (c1, c2, eps.den > 0).
inline bool deviation_lt(std::int64_t e1, std::int64_t c1,
                         std::int64_t e2, std::int64_t c2, const Ratio& eps) {
    __int128 lhs = (__int128)e1 * c2 - (__int128)e2 * c1;
    if (lhs < 0) lhs = -lhs;
    // lhs / (c1*c2) < eps  <=>  lhs * eps.den < eps.num * c1 * c2
    return lhs * eps.den < (__int128)eps.num * c1 * c2;
}

} // namespace hamlocate
