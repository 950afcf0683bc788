#include "escode/verify.hpp"

#include <cmath>
#include <limits>

#include "escode/errors.hpp"
#include "escode/lengths.hpp"
#include "escode/random.hpp"

namespace escode {

bool VerifySummary::all_satisfied() const {
    for (const InequalityTally& t : tallies)
        if (t.violations > 0) return false;
    return true;
}

VerifySummary run_verification(const VerifyOptions& opts) {
    if (opts.trials < 1) throw Error("trials must be >= 1");
    if (opts.n_min < 1 || opts.n_min > opts.n_max)
        throw Error("alphabet size range is empty");
    if (opts.base < 2) throw InvalidBase("alphabet size must be >= 2");
    if (opts.q_grid.empty()) throw InvalidOrder("the q grid has no entries");
    for (double q : opts.q_grid)
        if (std::isnan(q) || q < 0.0) throw InvalidOrder("grid order q must be >= 0");

    VerifySummary summary;
    summary.trials = opts.trials;
    for (long t = 0; t < opts.trials; ++t) {
        Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(t)));
        const std::size_t n = static_cast<std::size_t>(
            rng.uniform_int(opts.n_min, opts.n_max));
        const Distribution p = random_distribution(rng, n);
        const std::vector<int> lens = random_kraft_lengths(rng, n, opts.base);
        const LengthVector l = LengthVector::from_ints(lens);
        for (double q : opts.q_grid) {
            const std::vector<BoundReport> reports =
                verify_bounds(p, l, q, opts.base, opts.tolerance);
            if (summary.tallies.empty()) {
                for (const BoundReport& r : reports)
                    summary.tallies.push_back(
                        {r.measure_name + " >= " + r.bound_name, 0, 0,
                         std::numeric_limits<double>::infinity()});
            }
            for (std::size_t k = 0; k < reports.size(); ++k) {
                const BoundReport& r = reports[k];
                if (!r.applicable) continue;
                InequalityTally& tally = summary.tallies[k];
                ++tally.checked;
                if (!r.satisfied) ++tally.violations;
                tally.worst_slack = std::min(tally.worst_slack, r.slack);
            }
        }
    }
    return summary;
}

} // namespace escode
