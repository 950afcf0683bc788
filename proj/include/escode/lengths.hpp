#pragma once

#include <string>
#include <vector>

#include "escode/distribution.hpp"

namespace escode {

/// Per-symbol codeword lengths. Entries are positive reals; real codes use
/// integer values, ideal (bound-achieving) lengths are fractional. Pairing
/// with a Distribution of the same cardinality is checked by every measure.
class LengthVector {
public:
    explicit LengthVector(std::vector<double> lengths);
    static LengthVector from_ints(const std::vector<int>& lengths);

    std::size_t size() const { return lengths_.size(); }
    double operator[](std::size_t i) const { return lengths_[i]; }
    const std::vector<double>& values() const { return lengths_; }
    bool is_integral(double eps = 1e-9) const;

private:
    std::vector<double> lengths_;
};

/// Evaluated inequality: measure on the left, lower bound on the right.
/// slack = measure - bound; satisfied = slack >= -tolerance. A report whose
/// theorem hypotheses exclude the given q (or whose gate condition fails) is
/// marked not applicable and carries NaN values.
struct BoundReport {
    std::string measure_name;
    double measure_value;
    std::string bound_name;
    double bound_value;
    double slack;
    bool satisfied;
    bool equality_within_tolerance;
    bool applicable;
};

/// Expected length L-bar = sum_i p_i l_i.
double expected_length(const Distribution& p, const LengthVector& l);

/// Campbell length C_beta = (1/beta) log_D sum_i p_i D^(beta l_i) for
/// beta > 0 (InvalidOrder otherwise). Exponential (Kolmogorov-Nagumo) mean;
/// evaluated by shifted log-sum-exp so large beta*l does not overflow.
double campbell_length(const Distribution& p, const LengthVector& l,
                       double beta, unsigned base);

/// Escort mean length M_q = sum_i escort(p,q)_i l_i.
double escort_mean_length(const Distribution& p, const LengthVector& l, double q);

/// The escort-exponential length
///   L_q = 1/(q-1) log_D [ sum_i escort(p,q)_i D^((q-1) l_i) ],
/// mixing escort weights with Campbell-style exponential weighting.
/// q = 1 returns expected_length (the L'Hospital limit); q = 0 equals
/// -log_D sum_(i in supp) D^(-l_i) + log_D |supp|; for q -> inf it converges
/// to the length of the argmax symbol whenever that symbol dominates
/// p_i D^(l_i) (true in particular for near-ideal codes). Evaluated by
/// fully-shifted log-sum-exp, stable up to q ~ 1e3 and beyond.
double escort_exponential_length(const Distribution& p, const LengthVector& l,
                                 double q, unsigned base);

/// Ideal Shannon lengths l_i = -log_D p_i ("bit-numbers"), optionally
/// rounded up to integers (the rounded vector always satisfies Kraft).
/// Throws ZeroProbability unless p has full support; use
/// restrict_to_support first to code only the support.
LengthVector ideal_lengths_shannon(const Distribution& p, unsigned base,
                                   bool integer_rounding);

/// Campbell-optimal lengths l_i = -log_D escort(p,q)_i, q > 0; equivalently
/// l_i = -q log_D p_i + (1-q) H_q(p). Real-valued unless integer_rounding.
LengthVector ideal_lengths_campbell(const Distribution& p, double q,
                                    unsigned base, bool integer_rounding);

/// Evaluates every lower-bound theorem on (p, l, q):
///   L-bar >= H_1(p)            (Shannon; q-independent)
///   C_beta >= H_q(p)           with beta = (1-q)/q, applicable for 0 < q < 1
///   M_q   >= H_1(escort(p,q))
///   L_q   >= H_q(p)
///   M_q   >= L_q               applicable for q <= 1 (the Jensen direction
///                              reverses at q > 1, where L_q >= M_q instead)
///   M_q   >= S_q(p)            applicable only when sum_i exp_q(-l_i) <= 1
/// The lengths must satisfy Kraft-McMillan for the base (the hypothesis of
/// every theorem); otherwise KraftViolation is thrown. For Kraft-feasible
/// lengths every applicable report comes back satisfied -- a violation
/// indicates an implementation bug, not an unlucky input.
std::vector<BoundReport> verify_bounds(const Distribution& p, const LengthVector& l,
                                       double q, unsigned base,
                                       double tolerance = 1e-9);

} // namespace escode
