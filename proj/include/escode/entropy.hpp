#pragma once

#include "escode/distribution.hpp"

namespace escode {

/// Entropy order (alpha / q) together with the logarithm base D. The base is
/// the size of the coding alphabet, so every entropy value is directly
/// comparable with codeword lengths counted in D-ary digits.
///
/// The order parameter plays a double role in this library: it is both the
/// entropy order alpha and the escort index q. They arise as distinct
/// concepts but are merged here, as in all the length/bound machinery.
struct EntropyOrder {
    double order;
    unsigned base;

    EntropyOrder(double order_, unsigned base_);
};

/// Renyi entropy H_alpha(p) = 1/(1-alpha) log_D sum_i p_i^alpha, with
/// zero-probability terms excluded. Delegates to Shannon for
/// |alpha - 1| < 1e-9 and uses a first-order expansion in the band up to
/// 1e-6 where the 1/(1-alpha) prefactor starts amplifying cancellation.
/// Stable for arbitrarily large alpha (log-sum-exp evaluation).
double renyi_entropy(const Distribution& p, const EntropyOrder& ord);
double renyi_entropy(const Distribution& p, double order, unsigned base);

/// Shannon entropy -sum_i p_i log_D p_i with 0 log 0 = 0.
double shannon_entropy(const Distribution& p, unsigned base);

/// Normalized Tsallis entropy S_q(p) = (1 - (sum_i p_i^q)^-1) / (1 - q),
/// in natural (q-deformed) units; at q = 1 it is the Shannon entropy in
/// nats. Equals -sum_i P_i ln_q(p_i) with P the escort of p, which makes
/// S_q(p) = M_q exactly at the lengths l_i = -ln_q(p_i).
/// Throws InvalidOrder for q < 0.
double tsallis_entropy_normalized(const Distribution& p, double q);

/// q-deformed logarithm ln_q(x) = (x^(1-q) - 1)/(1 - q), natural log at
/// q = 1. Requires x > 0.
double q_log(double x, double q);

/// q-deformed exponential, the inverse of q_log:
/// exp_q(x) = (1 + (1-q) x)^(1/(1-q)), e^x at q = 1. Throws DomainError
/// when 1 + (1-q) x <= 0 (outside the validity region).
double q_exp(double x, double q);

} // namespace escode
