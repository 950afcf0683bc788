#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "escode/distribution.hpp"
#include "escode/lengths.hpp"

namespace escode {

/// Digit characters for code alphabets: 0-9, then A-Z, then a-z. Bases up to
/// 62 are representable in the text formats; that is the cap enforced by
/// Codebook and the codec (the entropy/length math takes any base >= 2).
inline constexpr unsigned kMaxCodeBase = 62;

char digit_char(unsigned value);   // value < kMaxCodeBase
unsigned digit_value(char c);      // throws Error for a non-digit character
bool is_prefix_free(const std::vector<std::string>& words);

/// A symbol -> codeword mapping over a D-letter alphabet. Invariants:
/// 2 <= D <= 62, every codeword non-empty with digits below D, and the set
/// is prefix-free (which implies the Kraft-McMillan inequality).
class Codebook {
public:
    Codebook(unsigned alphabet_size, std::vector<std::string> codewords,
             std::optional<std::vector<std::string>> labels = std::nullopt);

    unsigned alphabet_size() const { return alphabet_size_; }
    std::size_t size() const { return codewords_.size(); }
    const std::string& codeword(std::size_t i) const { return codewords_[i]; }
    const std::vector<std::string>& codewords() const { return codewords_; }
    const std::optional<std::vector<std::string>>& labels() const { return labels_; }
    std::string label(std::size_t i) const;

    LengthVector lengths() const;

private:
    unsigned alphabet_size_;
    std::vector<std::string> codewords_;
    std::optional<std::vector<std::string>> labels_;
};

/// Kraft-McMillan sum K = sum_i D^(-l_i); lengths may be real-valued.
double kraft_sum(const LengthVector& l, unsigned base);
/// Feasible iff K <= 1 + tolerance.
bool kraft_feasible(const LengthVector& l, unsigned base, double tolerance = 1e-9);

/// D-ary Huffman code for p: a prefix code minimizing sum_i p_i l_i.
/// Deterministic tie-breaking: nodes are merged in (weight, smallest
/// contained symbol index) order and a merged node inherits that smallest
/// index. Zero-probability symbols are kept and end up with the longest
/// codewords. For D > 2 the usual dummy-symbol padding makes the final merge
/// full; dummies are stripped from the result. A single-symbol source gets
/// the one-digit codeword "0". Codewords are assigned canonically from the
/// optimal lengths, so equal-length multisets always yield the same book.
Codebook huffman(const Distribution& p, unsigned base);

/// Huffman code for the escort distribution escort(p, q): the integer-length
/// prefix code minimizing the escort mean length M_q (and thereby the
/// Campbell length C_beta with q = 1/(beta+1)).
Codebook escort_huffman(const Distribution& p, double q, unsigned base);

/// Canonical realization of Kraft-feasible integer lengths: symbols sorted
/// by (length, index) receive successive base-D numerals left-justified to
/// their length. Throws NonIntegerLength / KraftViolation.
Codebook code_from_lengths(const LengthVector& l, unsigned base,
                           std::optional<std::vector<std::string>> labels = std::nullopt);

/// Test oracle: enumerates every non-decreasing Kraft-feasible integer
/// length multiset with entries in [1, max_len], assigns lengths to symbols
/// by decreasing escort probability, and returns the minimizer of M_q with
/// its value. Guarded to N <= 8, max_len <= 12 (InstanceTooLarge).
std::pair<LengthVector, double> exhaustive_optimal(const Distribution& p, double q,
                                                   unsigned base, int max_len);

/// Codebook text format: required header line `#D=<alphabet_size>`, then
/// `label<TAB>codeword` records; other #-lines and blank lines are ignored.
Codebook read_codebook_tsv(std::istream& in);
Codebook read_codebook_file(const std::string& path);
void write_codebook_tsv(std::ostream& out, const Codebook& book);

} // namespace escode
