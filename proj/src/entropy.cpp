#include "escode/entropy.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "escode/errors.hpp"
#include "escode/numeric.hpp"

namespace escode {

namespace {

void check_base(unsigned base) {
    if (base < 2) throw InvalidBase("logarithm base must be >= 2");
}

void check_order(double order) {
    if (std::isnan(order) || order < 0.0)
        throw InvalidOrder("entropy order must be >= 0");
}

// First two moments of ln p under p, over the support. Feeds the
// near-order-1 expansions where the closed forms cancel catastrophically.
struct LogMoments {
    double mean;     // sum p ln p
    double second;   // sum p (ln p)^2
    double variance() const { return second - mean * mean; }
};

LogMoments log_moments(const Distribution& p) {
    CompensatedSum m1, m2;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            const double lp = std::log(p[i]);
            m1.add(p[i] * lp);
            m2.add(p[i] * lp * lp);
        }
    }
    return {m1.value(), m2.value()};
}

// ln sum_i p_i^alpha over the support, max-shifted.
double log_power_sum(const Distribution& p, double alpha) {
    std::vector<double> exps;
    exps.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > 0.0) exps.push_back(alpha * std::log(p[i]));
    return log_sum_exp(exps);
}

constexpr double kOrderSwitch = 1e-9;    // below this, order 1 exactly
constexpr double kOrderExpand = 1e-6;    // below this, first-order expansion

} // namespace

EntropyOrder::EntropyOrder(double order_, unsigned base_)
    : order(order_), base(base_) {
    check_order(order);
    check_base(base);
}

double shannon_entropy(const Distribution& p, unsigned base) {
    check_base(base);
    return -log_moments(p).mean / std::log(static_cast<double>(base));
}

double renyi_entropy(const Distribution& p, const EntropyOrder& ord) {
    const double alpha = ord.order;
    const double ln_base = std::log(static_cast<double>(ord.base));
    if (std::isinf(alpha)) {
        double pmax = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) pmax = std::max(pmax, p[i]);
        return -std::log(pmax) / ln_base;
    }
    const double dev = alpha - 1.0;
    if (std::abs(dev) < kOrderSwitch) return shannon_entropy(p, ord.base);
    if (std::abs(dev) < kOrderExpand) {
        // H_alpha = H_1 - (alpha-1) Var_p(ln p) / (2 ln D) + O((alpha-1)^2)
        const LogMoments m = log_moments(p);
        return (-m.mean - dev * m.variance() / 2.0) / ln_base;
    }
    return log_power_sum(p, alpha) / ((1.0 - alpha) * ln_base);
}

double renyi_entropy(const Distribution& p, double order, unsigned base) {
    return renyi_entropy(p, EntropyOrder(order, base));
}

double tsallis_entropy_normalized(const Distribution& p, double q) {
    check_order(q);
    const double dev = q - 1.0;
    const LogMoments m = log_moments(p);
    if (std::abs(dev) < kOrderSwitch) return -m.mean;
    if (std::abs(dev) < kOrderExpand)
        // S_q = -m1 - (q-1)(m2/2 - m1^2) + O((q-1)^2)
        return -m.mean - dev * (m.second / 2.0 - m.mean * m.mean);
    // S_q = (1 - 1/Z_q)/(1 - q) with Z_q = sum p^q, via expm1 of ln Z_q.
    const double log_z = log_power_sum(p, q);
    return -std::expm1(-log_z) / (1.0 - q);
}

double q_log(double x, double q) {
    if (!(x > 0.0)) throw DomainError("q_log requires a positive argument");
    const double u = 1.0 - q;
    if (u == 0.0) return std::log(x);
    return std::expm1(u * std::log(x)) / u;
}

double q_exp(double x, double q) {
    const double u = 1.0 - q;
    if (u == 0.0) return std::exp(x);
    const double t = u * x;
    if (t <= -1.0)
        throw DomainError("q_exp argument outside the validity region");
    return std::exp(std::log1p(t) / u);
}

} // namespace escode
