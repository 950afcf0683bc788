#include "escode/coder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <tuple>

#include "escode/errors.hpp"
#include "escode/numeric.hpp"

namespace escode {

namespace {

void check_code_base(unsigned base) {
    if (base < 2 || base > kMaxCodeBase)
        throw InvalidBase("code alphabet size must be between 2 and " +
                          std::to_string(kMaxCodeBase));
}

} // namespace

char digit_char(unsigned value) {
    if (value < 10) return static_cast<char>('0' + value);
    if (value < 36) return static_cast<char>('A' + (value - 10));
    if (value < kMaxCodeBase) return static_cast<char>('a' + (value - 36));
    throw Error("digit value " + std::to_string(value) + " out of range");
}

unsigned digit_value(char c) {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'A' && c <= 'Z') return static_cast<unsigned>(c - 'A') + 10;
    if (c >= 'a' && c <= 'z') return static_cast<unsigned>(c - 'a') + 36;
    throw Error(std::string("'") + c + "' is not a code digit");
}

bool is_prefix_free(const std::vector<std::string>& words) {
    // After sorting, any prefix pair appears adjacent.
    std::vector<std::string> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        const std::string& a = sorted[i];
        const std::string& b = sorted[i + 1];
        if (a.size() <= b.size() && b.compare(0, a.size(), a) == 0) return false;
    }
    return true;
}

Codebook::Codebook(unsigned alphabet_size, std::vector<std::string> codewords,
                   std::optional<std::vector<std::string>> labels)
    : alphabet_size_(alphabet_size),
      codewords_(std::move(codewords)),
      labels_(std::move(labels)) {
    check_code_base(alphabet_size_);
    if (codewords_.empty()) throw Error("codebook has no codewords");
    if (labels_ && labels_->size() != codewords_.size())
        throw CardinalityMismatch("label count does not match codeword count");
    for (const std::string& w : codewords_) {
        if (w.empty()) throw Error("empty codeword");
        for (char c : w) {
            if (digit_value(c) >= alphabet_size_)
                throw Error(std::string("digit '") + c + "' out of range for base " +
                            std::to_string(alphabet_size_));
        }
    }
    if (!is_prefix_free(codewords_))
        throw NonPrefixCodebook("a codeword is a prefix of another codeword");
}

std::string Codebook::label(std::size_t i) const {
    if (labels_) return (*labels_)[i];
    return std::to_string(i);
}

LengthVector Codebook::lengths() const {
    std::vector<double> lens(codewords_.size());
    for (std::size_t i = 0; i < codewords_.size(); ++i)
        lens[i] = static_cast<double>(codewords_[i].size());
    return LengthVector(std::move(lens));
}

double kraft_sum(const LengthVector& l, unsigned base) {
    if (base < 2) throw InvalidBase("alphabet size must be >= 2");
    // exp2 keeps the terms exact for D = 2 and integer lengths.
    const double log2_base = std::log2(static_cast<double>(base));
    CompensatedSum acc;
    for (std::size_t i = 0; i < l.size(); ++i) acc.add(std::exp2(-l[i] * log2_base));
    return acc.value();
}

bool kraft_feasible(const LengthVector& l, unsigned base, double tolerance) {
    return kraft_sum(l, base) <= 1.0 + tolerance;
}

namespace {

// One Huffman arena node: a leaf (symbol >= 0) or a merge of `children`.
// min_index is the smallest original symbol index contained in the subtree;
// together with the weight it makes the merge order a strict total order.
struct HuffNode {
    double weight;
    std::size_t min_index;
    int symbol;
    std::vector<int> children;
};

std::vector<int> huffman_lengths(const std::vector<double>& weights, unsigned base) {
    const std::size_t n = weights.size();
    if (n == 1) return {1};

    std::vector<HuffNode> arena;
    arena.reserve(2 * n + base);
    using Key = std::tuple<double, std::size_t, int>; // (weight, min_index, node)
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> heap;
    for (std::size_t i = 0; i < n; ++i) {
        arena.push_back({weights[i], i, static_cast<int>(i), {}});
        heap.emplace(weights[i], i, static_cast<int>(i));
    }
    // Pad with zero-weight dummies so every merge takes exactly `base` nodes
    // and the final merge is full: node count must be 1 mod (base - 1).
    const std::size_t mod = base - 1;
    const std::size_t dummies = (mod - (n - 1) % mod) % mod;
    for (std::size_t j = 0; j < dummies; ++j) {
        const std::size_t idx = n + j;
        arena.push_back({0.0, idx, -1, {}});
        heap.emplace(0.0, idx, static_cast<int>(arena.size()) - 1);
    }

    while (heap.size() > 1) {
        HuffNode parent{0.0, std::numeric_limits<std::size_t>::max(), -1, {}};
        CompensatedSum wsum;
        for (unsigned k = 0; k < base && !heap.empty(); ++k) {
            const auto [w, mi, node] = heap.top();
            heap.pop();
            wsum.add(w);
            parent.min_index = std::min(parent.min_index, mi);
            parent.children.push_back(node);
        }
        parent.weight = wsum.value();
        arena.push_back(parent);
        heap.emplace(parent.weight, parent.min_index,
                     static_cast<int>(arena.size()) - 1);
    }

    std::vector<int> lengths(n, 0);
    // Depth-first from the root; the arena is small, recursion via explicit stack.
    std::vector<std::pair<int, int>> stack{{std::get<2>(heap.top()), 0}};
    while (!stack.empty()) {
        const auto [node, depth] = stack.back();
        stack.pop_back();
        const HuffNode& hn = arena[static_cast<std::size_t>(node)];
        if (hn.children.empty()) {
            if (hn.symbol >= 0) lengths[static_cast<std::size_t>(hn.symbol)] = depth;
        } else {
            for (int child : hn.children) stack.emplace_back(child, depth + 1);
        }
    }
    return lengths;
}

} // namespace

Codebook huffman(const Distribution& p, unsigned base) {
    check_code_base(base);
    const std::vector<int> lens = huffman_lengths(p.probs(), base);
    std::optional<std::vector<std::string>> labels = p.labels();
    return code_from_lengths(LengthVector::from_ints(lens), base, std::move(labels));
}

Codebook escort_huffman(const Distribution& p, double q, unsigned base) {
    return huffman(escort(p, q), base);
}

Codebook code_from_lengths(const LengthVector& l, unsigned base,
                           std::optional<std::vector<std::string>> labels) {
    check_code_base(base);
    if (!l.is_integral()) throw NonIntegerLength("codeword lengths must be integers");
    const std::size_t n = l.size();
    std::vector<int> lens(n);
    int max_len = 0;
    for (std::size_t i = 0; i < n; ++i) {
        lens[i] = static_cast<int>(std::llround(l[i]));
        max_len = std::max(max_len, lens[i]);
    }
    // Exact Kraft test in integer units of D^-max_len where that fits;
    // otherwise the compensated floating sum (tolerance covers rounding).
    const double bits = max_len * std::log2(static_cast<double>(base));
    if (bits <= 62.0) {
        std::uint64_t unit = 1;
        for (int k = 0; k < max_len; ++k) unit *= base;
        std::uint64_t total = 0;
        for (int li : lens) {
            std::uint64_t term = unit;
            for (int k = 0; k < li; ++k) term /= base;
            total += term;
            if (total > unit)
                throw KraftViolation("lengths violate the Kraft inequality for base " +
                                     std::to_string(base));
        }
    } else if (!kraft_feasible(l, base)) {
        throw KraftViolation("lengths violate the Kraft inequality for base " +
                             std::to_string(base));
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lens[a] != lens[b]) return lens[a] < lens[b];
        return a < b;
    });

    // Successive base-D numerals: increment the previous codeword as a
    // base-D digit vector, then left-justify (append zeros) to the new length.
    std::vector<std::string> words(n);
    std::vector<unsigned> digits;
    for (std::size_t rank = 0; rank < n; ++rank) {
        const std::size_t sym = order[rank];
        const std::size_t len = static_cast<std::size_t>(lens[sym]);
        if (rank == 0) {
            digits.assign(len, 0);
        } else {
            std::size_t pos = digits.size();
            while (pos > 0) {
                --pos;
                if (++digits[pos] < base) break;
                digits[pos] = 0;
                if (pos == 0)
                    throw KraftViolation("canonical assignment overflowed; "
                                         "lengths are not Kraft-feasible");
            }
            digits.resize(len, 0);
        }
        std::string w(len, '0');
        for (std::size_t k = 0; k < len; ++k) w[k] = digit_char(digits[k]);
        words[sym] = w;
    }
    return Codebook(base, std::move(words), std::move(labels));
}

std::pair<LengthVector, double> exhaustive_optimal(const Distribution& p, double q,
                                                   unsigned base, int max_len) {
    check_code_base(base);
    const std::size_t n = p.size();
    if (n > 8) throw InstanceTooLarge("exhaustive search is limited to 8 symbols");
    if (max_len < 1 || max_len > 12)
        throw InstanceTooLarge("exhaustive search is limited to lengths in [1, 12]");
    if (max_len * std::log2(static_cast<double>(base)) > 60.0)
        throw InstanceTooLarge("base^max_len exceeds exact integer range");

    // Escort probabilities sorted descending; the rearrangement inequality
    // says the optimal assignment of any length multiset pairs the largest
    // probability with the shortest length.
    const Distribution esc = escort(p, q);
    std::vector<std::size_t> by_prob(n);
    for (std::size_t i = 0; i < n; ++i) by_prob[i] = i;
    std::stable_sort(by_prob.begin(), by_prob.end(), [&](std::size_t a, std::size_t b) {
        return esc[a] > esc[b];
    });

    std::uint64_t unit = 1;
    for (int k = 0; k < max_len; ++k) unit *= base;

    std::vector<int> current(n, 0);
    std::vector<int> best_sorted;
    double best_m = std::numeric_limits<double>::infinity();

    // Enumerates non-decreasing length vectors with an exact running Kraft
    // budget in units of base^-max_len.
    auto recurse = [&](auto&& self, std::size_t pos, int min_len,
                       std::uint64_t used) -> void {
        if (pos == n) {
            double m = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                m += esc[by_prob[i]] * current[i];
            if (m < best_m) {
                best_m = m;
                best_sorted = current;
            }
            return;
        }
        for (int len = min_len; len <= max_len; ++len) {
            std::uint64_t term = unit;
            for (int k = 0; k < len; ++k) term /= base;
            if (used + term > unit) continue; // longer lengths may still fit
            current[pos] = len;
            self(self, pos + 1, len, used + term);
        }
    };
    recurse(recurse, 0, 1, 0);

    if (best_sorted.empty())
        throw InstanceTooLarge("no Kraft-feasible length vector within max_len");

    std::vector<double> per_symbol(n);
    for (std::size_t i = 0; i < n; ++i)
        per_symbol[by_prob[i]] = best_sorted[i];
    return {LengthVector(std::move(per_symbol)), best_m};
}

namespace {

bool parse_unsigned(const std::string& s, unsigned long& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtoul(s.c_str(), &end, 10);
    return end == s.c_str() + s.size();
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

} // namespace

Codebook read_codebook_tsv(std::istream& in) {
    std::optional<unsigned> base;
    std::vector<std::string> labels;
    std::vector<std::string> words;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("#D=", 0) == 0 && !base) {
                unsigned long d = 0;
                if (!parse_unsigned(line.substr(3), d) || d < 2 || d > kMaxCodeBase)
                    throw ParseError(lineno, "invalid alphabet size in '" + line + "'");
                base = static_cast<unsigned>(d);
            }
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError(lineno, "expected label<TAB>codeword");
        const std::string label = line.substr(0, tab);
        const std::string word = line.substr(tab + 1);
        if (word.empty()) throw ParseError(lineno, "empty codeword");
        if (!base) throw ParseError(lineno, "codeword record before the #D= header");
        for (char c : word) {
            unsigned v = 0;
            try {
                v = digit_value(c);
            } catch (const Error&) {
                throw ParseError(lineno, std::string("'") + c + "' is not a code digit");
            }
            if (v >= *base)
                throw ParseError(lineno, std::string("digit '") + c +
                                             "' out of range for base " +
                                             std::to_string(*base));
        }
        labels.push_back(label);
        words.push_back(word);
    }
    if (!base) throw ParseError(lineno == 0 ? 1 : lineno, "missing #D= header line");
    if (words.empty())
        throw ParseError(lineno == 0 ? 1 : lineno, "no codeword records in input");
    return Codebook(*base, std::move(words), std::move(labels));
}

Codebook read_codebook_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open codebook file: " + path);
    return read_codebook_tsv(in);
}

void write_codebook_tsv(std::ostream& out, const Codebook& book) {
    out << "#D=" << book.alphabet_size() << '\n';
    for (std::size_t i = 0; i < book.size(); ++i) {
        check_tsv_label(book.label(i));
        out << book.label(i) << '\t' << book.codeword(i) << '\n';
    }
}

} // namespace escode
