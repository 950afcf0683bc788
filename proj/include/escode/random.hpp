#pragma once

#include <cstdint>
#include <vector>

#include "escode/distribution.hpp"

namespace escode {

/// splitmix64: tiny, seedable, and bit-for-bit identical on every platform
/// (std::uniform_*_distribution is implementation-defined, so the verify
/// subcommand and the property tests roll their own mappings).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double u01();
    /// Uniform in (0, 1]; never returns 0, safe under log().
    double u01_open();
    /// Uniform integer in [lo, hi] inclusive.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);
    double exponential();

private:
    std::uint64_t state_;
};

/// Derives the deterministic seed of one trial from (master seed, index), so
/// trials are independent of execution order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Full-support random distribution (symmetric Dirichlet via normalized
/// exponentials).
Distribution random_distribution(Rng& rng, std::size_t n);

/// Random Kraft-feasible integer lengths: ceil(-log_D r_i) of a random
/// distribution r (always feasible), then random tightening steps that keep
/// the Kraft sum at or below 1. Lengths are bounded via a floor mixed into r.
std::vector<int> random_kraft_lengths(Rng& rng, std::size_t n, unsigned base);

/// i.i.d. sample of symbol indices from p (inverse-CDF on u01).
std::vector<std::size_t> random_symbols(Rng& rng, const Distribution& p,
                                        std::size_t count);

} // namespace escode
