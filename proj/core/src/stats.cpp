#include "snakelab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>
#include <nlohmann/json.hpp>

namespace snakelab::stats {

std::string StatReport::to_jsonl() const {
    nlohmann::json j;
    j["name"] = name;
    j["statistic"] = statistic;
    j["sample_a"] = sample_a;
    j["sample_b"] = sample_b;
    if (p_value >= 0.0) j["p_value"] = p_value;
    j["threshold"] = threshold;
    j["pass"] = pass;
    if (!metadata.empty()) j["metadata"] = metadata;
    return j.dump();
}

double mean(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double variance(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double hi = v[mid];
    if (v.size() % 2 == 1) return hi;
    std::nth_element(v.begin(), v.begin() + mid - 1, v.end());
    return 0.5 * (hi + v[mid - 1]);
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov
// ---------------------------------------------------------------------------

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("ks_statistic_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(i / na - j / nb));
    }
    return d;
}

namespace {
// Kolmogorov survival function Q(lambda) = 2 sum (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda) {
    if (lambda <= 0.0) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        if (term < 1e-12) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}
} // namespace

double ks_p_value(double d, std::size_t na, std::size_t nb) {
    const double ne = static_cast<double>(na) * static_cast<double>(nb) /
                      static_cast<double>(na + nb);
    const double sq = std::sqrt(ne);
    return kolmogorov_q((sq + 0.12 + 0.11 / sq) * d);
}

double ks_exact_p_two_sample(double d, std::size_t na, std::size_t nb) {
    // Fraction of monotone lattice paths (0,0) -> (na,nb) with
    // max |i/na - j/nb| < d; the complement is P(D >= d).
    const double eps = 1e-12;
    const double dna = static_cast<double>(na);
    const double dnb = static_cast<double>(nb);
    auto inside = [&](std::size_t i, std::size_t j) {
        return std::abs(static_cast<double>(i) / dna - static_cast<double>(j) / dnb) < d - eps;
    };
    // Path counts fit in doubles for the small sizes this is meant for.
    std::vector<std::vector<double>> paths(na + 1, std::vector<double>(nb + 1, 0.0));
    paths[0][0] = 1.0;
    for (std::size_t i = 0; i <= na; ++i) {
        for (std::size_t j = 0; j <= nb; ++j) {
            if (i == 0 && j == 0) continue;
            if (!inside(i, j)) {
                paths[i][j] = 0.0;
                continue;
            }
            double v = 0.0;
            if (i > 0) v += paths[i - 1][j];
            if (j > 0) v += paths[i][j - 1];
            paths[i][j] = v;
        }
    }
    double total = 1.0;
    // binomial(na+nb, na)
    for (std::size_t k = 1; k <= nb; ++k)
        total = total * static_cast<double>(na + k) / static_cast<double>(k);
    return 1.0 - paths[na][nb] / total;
}

StatReport ks_two_sample(const std::vector<double>& a, const std::vector<double>& b,
                         const std::string& name, double p_threshold) {
    if (a.size() < 20 || b.size() < 20)
        throw std::invalid_argument("ks_two_sample: need sample sizes >= 20");
    StatReport r;
    r.name = name;
    r.sample_a = a.size();
    r.sample_b = b.size();
    r.statistic = ks_statistic_two_sample(a, b);
    r.p_value = ks_p_value(r.statistic, a.size(), b.size());
    r.threshold = p_threshold;
    r.pass = r.p_value > p_threshold;
    return r;
}

StatReport ks_one_sample_normal(const std::vector<double>& sample,
                                const std::string& name, double p_threshold) {
    StatReport r;
    r.name = name;
    r.sample_a = sample.size();
    r.statistic = ks_statistic_one_sample(sample, [](double x) { return normal_cdf(x); });
    const double sq = std::sqrt(static_cast<double>(sample.size()));
    r.p_value = kolmogorov_q((sq + 0.12 + 0.11 / sq) * r.statistic);
    r.threshold = p_threshold;
    r.pass = r.p_value > p_threshold;
    return r;
}

// ---------------------------------------------------------------------------
// Chi-square
// ---------------------------------------------------------------------------

double chi_square_p_value(double statistic, int dof) {
    if (dof <= 0) throw std::invalid_argument("chi_square_p_value: dof must be positive");
    return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

StatReport chi_square_discrete(const std::vector<std::uint64_t>& counts,
                               const std::vector<double>& pmf,
                               const std::string& name,
                               double p_threshold,
                               double min_expected) {
    if (counts.size() != pmf.size() || counts.empty())
        throw std::invalid_argument("chi_square_discrete: counts/pmf size mismatch");
    const double total = static_cast<double>(
        std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
    if (total == 0.0) throw std::invalid_argument("chi_square_discrete: no observations");

    const double pmf_sum = std::accumulate(pmf.begin(), pmf.end(), 0.0);
    if (pmf_sum > 1.0 + 1e-9) throw std::invalid_argument("chi_square_discrete: pmf sums > 1");

    // The last listed bin is the tail bin: it also carries any residual
    // probability mass beyond the listed support.  Bins are merged from the
    // right until every expected count is >= min_expected.
    std::vector<double> expected(counts.size());
    std::vector<double> observed(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) {
        expected[k] = pmf[k] * total;
        observed[k] = static_cast<double>(counts[k]);
    }
    expected.back() += (1.0 - pmf_sum) * total;
    while (expected.size() > 2 && expected.back() < min_expected) {
        expected[expected.size() - 2] += expected.back();
        observed[observed.size() - 2] += observed.back();
        expected.pop_back();
        observed.pop_back();
    }
    if (expected.size() < 2)
        throw std::invalid_argument("chi_square_discrete: not enough bins after merging");

    double stat = 0.0;
    for (std::size_t k = 0; k < expected.size(); ++k) {
        const double diff = observed[k] - expected[k];
        stat += diff * diff / expected[k];
    }
    StatReport r;
    r.name = name;
    r.sample_a = static_cast<std::size_t>(total);
    r.statistic = stat;
    r.p_value = chi_square_p_value(stat, static_cast<int>(expected.size()) - 1);
    r.threshold = p_threshold;
    r.pass = r.p_value > p_threshold;
    r.metadata["bins"] = static_cast<double>(expected.size());
    return r;
}

// ---------------------------------------------------------------------------
// Regression / moments
// ---------------------------------------------------------------------------

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("ols_slope: need at least two points");
    const double mx = mean(x), my = mean(y);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("ols_slope: degenerate x");
    return sxy / sxx;
}

double hurst_regress(const std::vector<double>& n_values,
                     const std::vector<double>& variances) {
    if (n_values.size() != variances.size() || n_values.size() < 2)
        throw std::invalid_argument("hurst_regress: need at least two points");
    std::vector<double> lx(n_values.size()), ly(n_values.size());
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] <= 0.0 || variances[i] <= 0.0)
            throw std::invalid_argument("hurst_regress: values must be positive");
        lx[i] = std::log(n_values[i]);
        ly[i] = std::log(variances[i]);
    }
    return 0.5 * ols_slope(lx, ly);
}

WilsonInterval wilson(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) throw std::invalid_argument("wilson: zero trials");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {p, centre - half, centre + half};
}

StatReport martingale_check(const std::vector<std::vector<double>>& increments,
                            const std::string& name, double z_max) {
    if (increments.empty())
        throw std::invalid_argument("martingale_check: no increments");
    double worst = 0.0;
    for (const auto& slot : increments) {
        if (slot.size() < 2) continue;
        const double m = mean(slot);
        const double se = std::sqrt(variance(slot) / static_cast<double>(slot.size()));
        if (se == 0.0) {
            if (m != 0.0) worst = std::max(worst, z_max + 1.0);
            continue;
        }
        worst = std::max(worst, std::abs(m) / se);
    }
    StatReport r;
    r.name = name;
    r.sample_a = increments.front().size();
    r.sample_b = increments.size();
    r.statistic = worst;
    r.threshold = z_max;
    r.pass = worst <= z_max;
    return r;
}

} // namespace snakelab::stats
