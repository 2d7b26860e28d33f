#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace snakelab::stats {

/// One test outcome, serialisable to JSONL.  `pass` must be consistent with
/// the recorded threshold so reports can be replayed and re-checked.
struct StatReport {
    std::string name;
    double statistic = 0.0;
    std::size_t sample_a = 0;
    std::size_t sample_b = 0;
    double p_value = -1.0;   // -1 when the test is threshold-based
    double threshold = 0.0;  // p cutoff or numeric tolerance
    bool pass = false;
    std::map<std::string, double> metadata;

    std::string to_jsonl() const;
};

/// Default acceptance thresholds, centralised: distributional equality is
/// accepted at p > 0.01, moment matches at 4 standard errors, asymptotic
/// constants at 5% relative error.
struct Thresholds {
    double p_distribution = 0.01;
    double moment_se = 4.0;
    double asymptotic_rel = 0.05;
};

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov
// ---------------------------------------------------------------------------

/// sup-distance between empirical CDFs.  Inputs need not be sorted.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

/// Asymptotic two-sided p-value for the two-sample statistic
/// (Kolmogorov distribution with the Stephens small-sample correction).
double ks_p_value(double d, std::size_t na, std::size_t nb);

/// Exact two-sample p-value P(D >= d) by lattice-path counting; feasible for
/// small samples.  Used to validate the asymptotic formula.
double ks_exact_p_two_sample(double d, std::size_t na, std::size_t nb);

StatReport ks_two_sample(const std::vector<double>& a, const std::vector<double>& b,
                         const std::string& name = "ks_two_sample",
                         double p_threshold = 0.01);

/// One-sample KS against a CDF given as a callable.
template <typename Cdf>
double ks_statistic_one_sample(std::vector<double> sample, Cdf&& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::max((i + 1) / n - f, f - i / n));
    }
    return d;
}

StatReport ks_one_sample_normal(const std::vector<double>& sample,
                                const std::string& name = "ks_vs_normal",
                                double p_threshold = 0.01);

// ---------------------------------------------------------------------------
// Chi-square goodness of fit for discrete laws
// ---------------------------------------------------------------------------

/// counts[k] observed, pmf[k] expected probabilities (same length; any
/// residual probability mass is lumped into a tail bin).  Bins with expected
/// count below `min_expected` are merged into the tail.
StatReport chi_square_discrete(const std::vector<std::uint64_t>& counts,
                               const std::vector<double>& pmf,
                               const std::string& name = "chi_square",
                               double p_threshold = 0.01,
                               double min_expected = 5.0);

double chi_square_p_value(double statistic, int dof);

// ---------------------------------------------------------------------------
// Regression / moments
// ---------------------------------------------------------------------------

/// OLS slope of y on x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Hurst estimate from a variance-growth table: regress log(var) on log(n),
/// slope = 2H.  Throws std::invalid_argument on fewer than two points.
double hurst_regress(const std::vector<double>& n_values,
                     const std::vector<double>& variances);

/// Wilson score interval for a binomial proportion.
struct WilsonInterval {
    double estimate;
    double low;
    double high;
};
WilsonInterval wilson(std::uint64_t successes, std::uint64_t trials, double z = 1.96);

/// Ensemble martingale-increment check: per-time-slot mean within z_max
/// standard errors of zero.  increments[t][replica].
StatReport martingale_check(const std::vector<std::vector<double>>& increments,
                            const std::string& name = "martingale_check",
                            double z_max = 3.0);

double mean(const std::vector<double>& v);
double variance(const std::vector<double>& v); // unbiased
double median(std::vector<double> v);

/// Standard normal CDF.
double normal_cdf(double x);

} // namespace snakelab::stats
