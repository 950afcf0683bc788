#include "escode/random.hpp"

#include <algorithm>
#include <cmath>

#include "escode/coder.hpp"
#include "escode/errors.hpp"

namespace escode {

std::uint64_t Rng::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double Rng::u01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::u01_open() {
    // Offset by half an ulp of the grid: lands strictly inside (0, 1).
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_int(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw Error("uniform_int bounds out of order");
    const std::uint64_t range = hi - lo + 1;
    if (range == 0) return next(); // whole 64-bit range
    return lo + next() % range;
}

double Rng::exponential() { return -std::log(u01_open()); }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    Rng mixer(seed ^ (0x9E3779B97F4A7C15ull * (stream + 1)));
    return mixer.next();
}

Distribution random_distribution(Rng& rng, std::size_t n) {
    if (n == 0) throw EmptyDistribution("cannot draw a distribution over 0 symbols");
    std::vector<double> weights(n);
    for (double& w : weights) w = rng.exponential();
    return Distribution(std::move(weights), std::nullopt, /*normalize=*/true);
}

namespace {

// Exact Kraft feasibility for small integer lengths, in units of base^-max.
bool exact_kraft_feasible(const std::vector<int>& lens, unsigned base) {
    int max_len = 1;
    for (int l : lens) max_len = std::max(max_len, l);
    if (max_len * std::log2(static_cast<double>(base)) > 60.0) {
        std::vector<double> real(lens.begin(), lens.end());
        return kraft_feasible(LengthVector(std::move(real)), base, 0.0);
    }
    std::uint64_t unit = 1;
    for (int k = 0; k < max_len; ++k) unit *= base;
    std::uint64_t total = 0;
    for (int l : lens) {
        std::uint64_t term = unit;
        for (int k = 0; k < l; ++k) term /= base;
        total += term;
        if (total > unit) return false;
    }
    return true;
}

} // namespace

std::vector<int> random_kraft_lengths(Rng& rng, std::size_t n, unsigned base) {
    if (n == 0) throw Error("cannot draw lengths for 0 symbols");
    if (base < 2) throw InvalidBase("alphabet size must be >= 2");
    if (n == 1) return {static_cast<int>(rng.uniform_int(1, 4))};
    // Ceil bit-numbers of a floored random distribution are always feasible;
    // the floor of 1/(4n) keeps every length at most ~log_D(4n) + 1.
    const Distribution r = random_distribution(rng, n);
    const double floor = 1.0 / (4.0 * static_cast<double>(n));
    const double ln_base = std::log(static_cast<double>(base));
    std::vector<int> lens(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double mixed = (r[i] + floor) / (1.0 + static_cast<double>(n) * floor);
        lens[i] = std::max(1, static_cast<int>(std::ceil(-std::log(mixed) / ln_base)));
    }
    // Random tightening: try to shorten random entries while staying feasible,
    // so complete (Kraft-equality) codes appear alongside slack ones.
    for (std::size_t t = 0; t < 2 * n; ++t) {
        const std::size_t i = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
        if (lens[i] <= 1) continue;
        --lens[i];
        if (!exact_kraft_feasible(lens, base)) ++lens[i];
    }
    return lens;
}

std::vector<std::size_t> random_symbols(Rng& rng, const Distribution& p,
                                        std::size_t count) {
    std::vector<double> cdf(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        cdf[i] = acc;
    }
    std::vector<std::size_t> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double u = rng.u01() * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        out[k] = std::min<std::size_t>(
            static_cast<std::size_t>(it - cdf.begin()), p.size() - 1);
    }
    return out;
}

} // namespace escode
