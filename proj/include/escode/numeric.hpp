#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <span>
#include <string>

namespace escode {

// Neumaier-compensated accumulator. Order-dependent but far tighter than a
// naive running sum; used everywhere a normalizer or an entropy sum is built.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
    CompensatedSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

// log(sum_i exp(e_i)) with the max shifted out. Empty input -> -inf.
inline double log_sum_exp(std::span<const double> exponents) {
    if (exponents.empty()) return -std::numeric_limits<double>::infinity();
    double m = -std::numeric_limits<double>::infinity();
    for (double e : exponents) m = std::max(m, e);
    if (!std::isfinite(m)) return m;
    CompensatedSum acc;
    for (double e : exponents) acc.add(std::exp(e - m));
    return m + std::log(acc.value());
}

// ln(x)/ln(base), routed through log2 where that is exact.
inline double log_base(double x, unsigned base) {
    if (base == 2) return std::log2(x);
    return std::log(x) / std::log(static_cast<double>(base));
}

// ceil that forgives values sitting a rounding error below an integer,
// e.g. -log2(0.25) evaluating to 2 + 4e-16 must round to 2, not 3.
inline double ceil_snapped(double x, double eps = 1e-9) {
    const double r = std::round(x);
    if (std::abs(x - r) <= eps) return r;
    return std::ceil(x);
}

inline bool nearly_integer(double x, double eps = 1e-9) {
    return std::abs(x - std::round(x)) <= eps;
}

// All user-facing numeric output goes through this: 12 significant digits.
inline std::string format_sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace escode
