#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace escode {

/// A probability distribution over a finite, indexed symbol alphabet.
///
/// Invariants, enforced at construction and never broken afterwards:
/// entries are >= 0, there is at least one symbol, at least one entry is
/// positive, and the entries sum to 1 within the construction tolerance
/// (exactly, when built with normalize = true). Instances are immutable.
class Distribution {
public:
    /// Validates and (optionally) renormalizes `probs`. With normalize unset
    /// the sum must already be within `tolerance` of 1, else NotNormalized.
    /// Throws NegativeProbability / EmptyDistribution accordingly.
    explicit Distribution(std::vector<double> probs,
                          std::optional<std::vector<std::string>> labels = std::nullopt,
                          bool normalize = false,
                          double tolerance = 1e-9);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }
    const std::optional<std::vector<std::string>>& labels() const { return labels_; }

    /// Label for symbol i: the stored one, or the 0-based index as text.
    std::string label(std::size_t i) const;

    std::vector<std::size_t> support() const;
    std::size_t support_size() const;
    bool full_support() const;
    /// Smallest index attaining the maximal probability.
    std::size_t argmax() const;

private:
    std::vector<double> probs_;
    std::optional<std::vector<std::string>> labels_;
};

/// Builds a Distribution from raw values (see Distribution ctor for errors).
Distribution make_distribution(std::vector<double> values, bool normalize,
                               double tolerance = 1e-9);

/// The escort transform P_i = p_i^q / sum_j p_j^q for q > 0, computed in
/// log space with the maximal exponent shifted out, then renormalized with a
/// compensated sum. Zero entries stay zero. q = 0 yields the uniform
/// distribution over the support of p. Throws InvalidOrder for q < 0.
Distribution escort(const Distribution& p, double q);

/// The sub-distribution over the support of p (same positive entries, same
/// order, labels carried along). No renormalization is needed: the positive
/// entries already sum to 1.
Distribution restrict_to_support(const Distribution& p);

/// Reads the distribution text format: one record per line, either
/// `label<TAB>probability` or a bare probability (symbols then named by
/// index). `#`-lines and blank lines are ignored. Throws ParseError with the
/// offending 1-based line number; NegativeProbability/NotNormalized are
/// reported as ParseError too so callers can point at the input file.
Distribution read_distribution_tsv(std::istream& in, bool normalize = false,
                                   double tolerance = 1e-9);
Distribution read_distribution_file(const std::string& path, bool normalize = false,
                                    double tolerance = 1e-9);

/// Labels are stored verbatim in TSV records, so a serializable label must
/// not start with the `#` comment marker or contain tab, CR, or LF; such a
/// label would vanish or split on reparse. Throws Error. Readers cannot
/// produce an offending label, only in-memory construction can.
void check_tsv_label(const std::string& label);

/// Writes `label<TAB>probability` lines with 12 significant digits.
/// Throws Error on a label that cannot round-trip (see check_tsv_label).
void write_distribution_tsv(std::ostream& out, const Distribution& p);

} // namespace escode
