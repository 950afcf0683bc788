#include "escode/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "escode/errors.hpp"
#include "escode/numeric.hpp"

namespace escode {

Distribution::Distribution(std::vector<double> probs,
                           std::optional<std::vector<std::string>> labels,
                           bool normalize, double tolerance)
    : probs_(std::move(probs)), labels_(std::move(labels)) {
    if (probs_.empty()) throw EmptyDistribution("distribution has no symbols");
    if (labels_ && labels_->size() != probs_.size())
        throw CardinalityMismatch("label count does not match probability count");
    for (double v : probs_) {
        if (std::isnan(v)) throw NegativeProbability("probability is NaN");
        if (v < 0.0) throw NegativeProbability("negative probability entry");
    }
    const double sum = compensated_sum(probs_);
    if (sum <= 0.0) throw EmptyDistribution("distribution has no positive mass");
    if (normalize) {
        for (double& v : probs_) v /= sum;
    } else if (std::abs(sum - 1.0) > tolerance) {
        throw NotNormalized("probabilities sum to " + format_sig12(sum) +
                            ", not 1 within tolerance " + format_sig12(tolerance));
    }
}

std::string Distribution::label(std::size_t i) const {
    if (labels_) return (*labels_)[i];
    return std::to_string(i);
}

std::vector<std::size_t> Distribution::support() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < probs_.size(); ++i)
        if (probs_[i] > 0.0) idx.push_back(i);
    return idx;
}

std::size_t Distribution::support_size() const {
    return static_cast<std::size_t>(
        std::count_if(probs_.begin(), probs_.end(), [](double v) { return v > 0.0; }));
}

bool Distribution::full_support() const { return support_size() == size(); }

std::size_t Distribution::argmax() const {
    return static_cast<std::size_t>(
        std::max_element(probs_.begin(), probs_.end()) - probs_.begin());
}

Distribution make_distribution(std::vector<double> values, bool normalize,
                               double tolerance) {
    return Distribution(std::move(values), std::nullopt, normalize, tolerance);
}

Distribution escort(const Distribution& p, double q) {
    if (q < 0.0 || std::isnan(q))
        throw InvalidOrder("escort index q must be >= 0");
    const std::size_t n = p.size();
    std::vector<double> weights(n, 0.0);
    if (q == 0.0) {
        for (std::size_t i = 0; i < n; ++i)
            if (p[i] > 0.0) weights[i] = 1.0;
    } else {
        // p_i^q = exp(q ln p_i), shifted by the largest exponent so extreme
        // q neither overflows nor underflows the whole sum.
        double max_e = -std::numeric_limits<double>::infinity();
        std::vector<double> exps(n, -std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < n; ++i) {
            if (p[i] > 0.0) {
                exps[i] = q * std::log(p[i]);
                max_e = std::max(max_e, exps[i]);
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            if (p[i] > 0.0) weights[i] = std::exp(exps[i] - max_e);
    }
    auto labels = p.labels();
    return Distribution(std::move(weights), std::move(labels), /*normalize=*/true);
}

Distribution restrict_to_support(const Distribution& p) {
    std::vector<double> probs;
    std::optional<std::vector<std::string>> labels;
    if (p.labels()) labels.emplace();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            probs.push_back(p[i]);
            if (labels) labels->push_back((*p.labels())[i]);
        }
    }
    return Distribution(std::move(probs), std::move(labels), /*normalize=*/false,
                        /*tolerance=*/1e-9);
}

namespace {

// Strict double parse: the whole token must be consumed.
bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

} // namespace

Distribution read_distribution_tsv(std::istream& in, bool normalize, double tolerance) {
    std::vector<double> probs;
    std::vector<std::string> labels;
    bool any_label = false;
    std::string line;
    std::size_t lineno = 0;
    std::size_t first_record_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        if (first_record_line == 0) first_record_line = lineno;
        const auto tab = line.find('\t');
        std::string label;
        std::string value_text;
        if (tab == std::string::npos) {
            value_text = line;
        } else {
            label = line.substr(0, tab);
            value_text = line.substr(tab + 1);
            any_label = true;
        }
        double v = 0.0;
        if (!parse_double(value_text, v))
            throw ParseError(lineno, "cannot parse probability '" + value_text + "'");
        if (std::isnan(v) || v < 0.0)
            throw ParseError(lineno, "negative probability " + value_text);
        probs.push_back(v);
        labels.push_back(label.empty() ? std::to_string(probs.size() - 1) : label);
    }
    if (probs.empty())
        throw ParseError(lineno == 0 ? 1 : lineno, "no probability records in input");
    std::optional<std::vector<std::string>> label_opt;
    if (any_label) label_opt = std::move(labels);
    try {
        return Distribution(std::move(probs), std::move(label_opt), normalize, tolerance);
    } catch (const NotNormalized& e) {
        throw ParseError(first_record_line,
                         std::string(e.what()) + " (pass normalize to rescale)");
    }
}

Distribution read_distribution_file(const std::string& path, bool normalize,
                                    double tolerance) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open distribution file: " + path);
    return read_distribution_tsv(in, normalize, tolerance);
}

void check_tsv_label(const std::string& label) {
    if (!label.empty() && label.front() == '#')
        throw Error("label '" + label + "' would reparse as a TSV comment; "
                    "use the decimal byte form instead");
    if (label.find_first_of("\t\r\n") != std::string::npos)
        throw Error("label contains a TSV separator character");
}

void write_distribution_tsv(std::ostream& out, const Distribution& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        check_tsv_label(p.label(i));
        out << p.label(i) << '\t' << format_sig12(p[i]) << '\n';
    }
}

} // namespace escode
