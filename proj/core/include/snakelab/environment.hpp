#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace snakelab::env {

enum class EnvKind { iid_logit, gaussian_hermite };

std::string to_string(EnvKind k);
EnvKind env_kind_from_string(const std::string& s);

/// Parameters of an environment ensemble.  Sites are two-sided, -length..length.
/// The transform bound g0 is tied to v_bound (g0 = ln((1-v)/v)) so a logit
/// bounded by g0 forces every beta into (v_bound, 1-v_bound).
struct EnvironmentSpec {
    EnvKind kind = EnvKind::iid_logit;
    std::int64_t length = 1024;   // sites -length .. length
    double v_bound = 0.05;        // uniform ellipticity, in (0, 1/2)
    double sigma = 1.0;           // sd of the iid logit law
    double hurst = 0.7;           // long-memory exponent, (1/2, 1)
    int moment_order = 3;         // j in the higher-moment condition
    std::uint64_t seed = 0;

    double g0() const;            // ln((1-v_bound)/v_bound)
    void validate() const;        // throws std::invalid_argument
};

/// Unit-variance stationary Gaussian sequence (fractional Gaussian noise).
struct GaussianSeq {
    std::vector<double> values;
    double hurst = 0.5;
};

/// Exact fGn autocovariance r(k) = ((k+1)^{2H} - 2k^{2H} + (k-1)^{2H}) / 2.
double fgn_autocov(double hurst, std::int64_t k);

/// Exact sampling of fGn by circulant embedding.  `length` must be a power
/// of two.  Deterministic given (seed, stream).  hurst in [1/2, 1): 1/2 gives
/// an i.i.d. sequence.
GaussianSeq gen_fgn(double hurst, std::size_t length, std::uint64_t seed,
                    std::uint64_t stream = 0);

/// Two-sided environment: logits l_i and betas beta_i = 1/(1+e^{l_i}).
struct Environment {
    std::vector<double> logits;  // site i stored at index i + length
    std::vector<double> betas;
    EnvironmentSpec spec;

    std::int64_t min_site() const { return -spec.length; }
    std::int64_t max_site() const { return spec.length; }
    bool contains(std::int64_t i) const { return i >= min_site() && i <= max_site(); }
    double logit(std::int64_t i) const;
    double beta(std::int64_t i) const;
    std::size_t size() const { return logits.size(); }
};

/// i.i.d. symmetric logits, uniform on [-sigma*sqrt(3), sigma*sqrt(3)].
/// Requires sigma*sqrt(3) <= g0 so the ellipticity bound holds.
Environment gen_iid_logits(const EnvironmentSpec& spec);

/// l_i = G(X_i) with G(x) = g0 * tanh(x): odd, bounded by g0, Hermite rank 1.
Environment hermite_transform(const GaussianSeq& x, const EnvironmentSpec& spec);

/// Dispatch on spec.kind.
Environment generate_environment(const EnvironmentSpec& spec);

/// Hermite-transform covariance table: c(k) = E[G(X_0)G(X_k)] computed by
/// two-dimensional Gauss-Hermite quadrature and cached per lag.  Also serves
/// partial-sum variances Var(sum_{i<=n} l_i), which define D_n.
class HermiteCovarianceTable {
public:
    HermiteCovarianceTable(double hurst, double g0, int quad_nodes = 64);

    double lag_cov(std::int64_t k) const;       // c(k), cached
    double partial_sum_variance(std::int64_t n) const; // sum_{i,j<=n} c(|i-j|)
    double c1() const;                          // E[G(X) X] (Hermite rank 1)

    /// Builds the cache up to max_lag so later reads are lock-free.
    void precompute(std::int64_t max_lag) const;

private:
    double compute_lag(std::int64_t k) const;
    double hurst_;
    double g0_;
    std::vector<double> nodes_;    // physicists' Gauss-Hermite
    std::vector<double> weights_;
    mutable std::vector<double> cache_;
    mutable std::vector<double> prefix_; // prefix sums of c(k), k >= 1
};

/// Shared per-(hurst, g0) table; built once, then read-only.
std::shared_ptr<const HermiteCovarianceTable> covariance_table(const EnvironmentSpec& spec);

/// The scaling sequence: iid kind D_n = sigma*sqrt(n); gaussian-hermite kind
/// D_n = sd of the n-site logit partial sum, from the covariance table.
double compute_Dn(const EnvironmentSpec& spec, std::int64_t n);

/// Rescaled environment: ln((1-b)/b) = l_i / D_n.
struct RescaledEnvironment {
    Environment base;
    std::int64_t n = 1;
    double D_n = 1.0;
    std::vector<double> rescaled_betas; // same indexing as base

    double beta_n(std::int64_t i) const;
    double logit_n(std::int64_t i) const { return base.logit(i) / D_n; }
    double offspring_mean(std::int64_t i) const; // beta/(1-beta) = e^{-l_i/D_n}
    bool contains(std::int64_t i) const { return base.contains(i); }
};

RescaledEnvironment rescale_env(Environment env, std::int64_t n, double D_n);
RescaledEnvironment rescale_env(Environment env, std::int64_t n); // D_n from spec

/// Two-sided discrete potential on the 1/n grid, constant on cells
/// [i/n, (i+1)/n).  For x >= 0 the value is the rescaled logit sum over
/// sites 1..floor(nx); for x < 0 the usual two-sided convention
/// -(sum over floor(nx)+1..0) applies, so the path is 0 on [0, 1/n).
struct PotentialPath {
    std::int64_t n = 1;
    std::int64_t min_cell = 0;   // cells min_cell .. max_cell
    std::int64_t max_cell = 0;
    std::vector<double> values;  // value on cell i at index i - min_cell

    double grid_step() const { return 1.0 / static_cast<double>(n); }
    double value_in_cell(std::int64_t cell) const;
    double at(double x) const;   // piecewise-constant lookup
    std::int64_t cell_of(double x) const;
};

/// Potential over cells covering [x_min, x_max].  Range must lie inside the
/// generated environment.
PotentialPath discrete_potential(const RescaledEnvironment& renv,
                                 double x_min, double x_max);

/// Scale-function primitive A(y) = int_0^y e^{W(x)} dx with exact per-cell
/// terms, plus its inverse.  Lives here because it is a pure function of the
/// potential; the diffusion module builds on it.
class ScaleFunction {
public:
    explicit ScaleFunction(const PotentialPath& potential);

    double a_min() const { return prefix_.front(); }
    double a_max() const { return prefix_.back(); }
    double domain_min() const;
    double domain_max() const;

    double value(double y) const;    // A(y)
    double inverse(double a) const;  // A^{-1}(a); throws if a outside range
    bool in_range(double a) const { return a > a_min() && a < a_max(); }

    /// Potential value at the cell containing y (handy for speed-measure terms).
    double potential_at(double y) const { return potential_.at(y); }
    const PotentialPath& potential() const { return potential_; }

private:
    PotentialPath potential_;
    std::vector<double> prefix_; // A at cell boundaries, size cells+1
};

} // namespace snakelab::env
