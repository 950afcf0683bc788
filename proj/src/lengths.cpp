#include "escode/lengths.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "escode/coder.hpp"
#include "escode/entropy.hpp"
#include "escode/errors.hpp"
#include "escode/numeric.hpp"

namespace escode {

namespace {

void check_base(unsigned base) {
    if (base < 2) throw InvalidBase("alphabet size must be >= 2");
}

void check_pairing(const Distribution& p, const LengthVector& l) {
    if (p.size() != l.size())
        throw CardinalityMismatch("distribution has " + std::to_string(p.size()) +
                                  " symbols but length vector has " +
                                  std::to_string(l.size()));
}

constexpr double kOrderSwitch = 1e-9;
constexpr double kOrderExpand = 1e-6;

// Mean and variance of x under p, restricted to the support of p.
struct Moments {
    double mean;
    double var;
};

Moments support_moments(const Distribution& p, const std::vector<double>& x) {
    CompensatedSum m1, m2;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            m1.add(p[i] * x[i]);
            m2.add(p[i] * x[i] * x[i]);
        }
    }
    const double mean = m1.value();
    return {mean, m2.value() - mean * mean};
}

// q-exponential with the Tsallis cutoff: 0 where 1 + (1-q)x <= 0. Used only
// for the footnote gate, where the cutoff (not an error) is the convention
// that makes the conditional bound a theorem.
double q_exp_cutoff(double x, double q) {
    const double u = 1.0 - q;
    if (u == 0.0) return std::exp(x);
    const double t = u * x;
    if (t <= -1.0) return 0.0;
    return std::exp(std::log1p(t) / u);
}

} // namespace

LengthVector::LengthVector(std::vector<double> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.empty()) throw InvalidLength("length vector has no entries");
    for (double v : lengths_)
        if (!(v > 0.0) || !std::isfinite(v))
            throw InvalidLength("codeword lengths must be positive and finite");
}

LengthVector LengthVector::from_ints(const std::vector<int>& lengths) {
    std::vector<double> vals(lengths.begin(), lengths.end());
    return LengthVector(std::move(vals));
}

bool LengthVector::is_integral(double eps) const {
    for (double v : lengths_)
        if (!nearly_integer(v, eps)) return false;
    return true;
}

double expected_length(const Distribution& p, const LengthVector& l) {
    check_pairing(p, l);
    CompensatedSum acc;
    for (std::size_t i = 0; i < p.size(); ++i) acc.add(p[i] * l[i]);
    return acc.value();
}

double campbell_length(const Distribution& p, const LengthVector& l,
                       double beta, unsigned base) {
    check_pairing(p, l);
    check_base(base);
    if (!(beta > 0.0)) throw InvalidOrder("Campbell parameter beta must be > 0");
    const double ln_base = std::log(static_cast<double>(base));
    std::vector<double> exps;
    exps.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > 0.0) exps.push_back(std::log(p[i]) + beta * l[i] * ln_base);
    return log_sum_exp(exps) / (beta * ln_base);
}

double escort_mean_length(const Distribution& p, const LengthVector& l, double q) {
    check_pairing(p, l);
    return expected_length(escort(p, q), l);
}

double escort_exponential_length(const Distribution& p, const LengthVector& l,
                                 double q, unsigned base) {
    check_pairing(p, l);
    check_base(base);
    if (std::isnan(q) || q < 0.0) throw InvalidOrder("order q must be >= 0");
    const double dev = q - 1.0;
    if (std::abs(dev) < kOrderSwitch) return expected_length(p, l);
    const double ln_base = std::log(static_cast<double>(base));
    if (std::abs(dev) < kOrderExpand) {
        // L_q = L-bar + (q-1)(Var_p[ln p + l ln D] - Var_p[ln p])/(2 ln D)
        // to first order; the closed form cancels to noise this close to 1.
        std::vector<double> a(p.size(), 0.0), c(p.size(), 0.0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] > 0.0) {
                a[i] = std::log(p[i]);
                c[i] = a[i] + l[i] * ln_base;
            }
        }
        const Moments ma = support_moments(p, a);
        const Moments mc = support_moments(p, c);
        return expected_length(p, l) + dev * (mc.var - ma.var) / (2.0 * ln_base);
    }
    // ln sum_i P_i D^((q-1) l_i) = LSE_i(q ln p_i + (q-1) l_i ln D) - ln Z_q
    // with both log-sum-exps fully shifted, so q of order 10^3 neither
    // underflows p^q nor overflows the length factor.
    std::vector<double> num, den;
    num.reserve(p.size());
    den.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            const double qlp = q * std::log(p[i]);
            num.push_back(qlp + dev * l[i] * ln_base);
            den.push_back(qlp);
        }
    }
    return (log_sum_exp(num) - log_sum_exp(den)) / (dev * ln_base);
}

LengthVector ideal_lengths_shannon(const Distribution& p, unsigned base,
                                   bool integer_rounding) {
    check_base(base);
    if (!p.full_support())
        throw ZeroProbability("a zero-probability symbol has no finite ideal length");
    const double ln_base = std::log(static_cast<double>(base));
    std::vector<double> lengths(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double li = -std::log(p[i]) / ln_base;
        lengths[i] = integer_rounding ? ceil_snapped(li) : li;
    }
    return LengthVector(std::move(lengths));
}

LengthVector ideal_lengths_campbell(const Distribution& p, double q,
                                    unsigned base, bool integer_rounding) {
    check_base(base);
    if (std::isnan(q) || !(q > 0.0))
        throw InvalidOrder("Campbell-optimal lengths need q > 0");
    if (!p.full_support())
        throw ZeroProbability("a zero-probability symbol has no finite ideal length");
    const double ln_base = std::log(static_cast<double>(base));
    // l_i = -log_D P_i = -q log_D p_i + (1-q) H_q(p); the entropy form is
    // exact at q = 1 and free of the power-sum cancellation.
    const double hq = renyi_entropy(p, q, base);
    std::vector<double> lengths(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double li = -q * std::log(p[i]) / ln_base + (1.0 - q) * hq;
        lengths[i] = integer_rounding ? ceil_snapped(li) : li;
    }
    return LengthVector(std::move(lengths));
}

std::vector<BoundReport> verify_bounds(const Distribution& p, const LengthVector& l,
                                       double q, unsigned base, double tolerance) {
    check_pairing(p, l);
    check_base(base);
    if (std::isnan(q) || q < 0.0) throw InvalidOrder("order q must be >= 0");
    const double ks = kraft_sum(l, base);
    if (ks > 1.0 + tolerance)
        throw KraftViolation("Kraft sum " + format_sig12(ks) +
                             " exceeds 1; the bounds assume a feasible code");

    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto make = [&](const std::string& mname, double mval, const std::string& bname,
                    double bval, bool applicable) {
        BoundReport r;
        r.measure_name = mname;
        r.bound_name = bname;
        r.applicable = applicable;
        if (applicable) {
            r.measure_value = mval;
            r.bound_value = bval;
            r.slack = mval - bval;
            r.satisfied = r.slack >= -tolerance;
            r.equality_within_tolerance = std::abs(r.slack) <= tolerance;
        } else {
            r.measure_value = nan;
            r.bound_value = nan;
            r.slack = nan;
            r.satisfied = true;
            r.equality_within_tolerance = false;
        }
        return r;
    };

    const double l_bar = expected_length(p, l);
    const double h1 = shannon_entropy(p, base);
    const Distribution esc = escort(p, q);
    const double m_q = expected_length(esc, l);
    const double h1_escort = shannon_entropy(esc, base);
    const double l_q = escort_exponential_length(p, l, q, base);
    const double h_q = renyi_entropy(p, q, base);

    std::vector<BoundReport> reports;
    reports.push_back(make("L_bar", l_bar, "H_1(p)", h1, true));

    const bool campbell_ok = q > 0.0 && q < 1.0;
    double c_beta = nan;
    if (campbell_ok) c_beta = campbell_length(p, l, (1.0 - q) / q, base);
    reports.push_back(make("C_beta", c_beta, "H_q(p)", h_q, campbell_ok));

    reports.push_back(make("M_q", m_q, "H_1(P)", h1_escort, true));
    reports.push_back(make("L_q", l_q, "H_q(p)", h_q, true));
    // Jensen gives M_q >= L_q only while dividing by q-1 flips the
    // exponential-mean inequality, i.e. for q <= 1; at q > 1 the order
    // reverses (p = (1/2,1/2), l = (1,2), q = 2: M = 1.5 < L = log2 3).
    reports.push_back(make("M_q", m_q, "L_q", l_q, q <= 1.0));

    // Footnote bound: valid only under the q-deformed Kraft condition.
    CompensatedSum gate;
    for (std::size_t i = 0; i < l.size(); ++i) gate.add(q_exp_cutoff(-l[i], q));
    const bool footnote_ok = gate.value() <= 1.0 + tolerance;
    const double s_q = tsallis_entropy_normalized(p, q);
    reports.push_back(make("M_q", m_q, "S_q(p)", s_q, footnote_ok));
    return reports;
}

} // namespace escode
