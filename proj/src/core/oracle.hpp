#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "cohomology_model.hpp"
#include "novikov.hpp"

namespace mnc {

/// Smallest acceptable separation between the numerically-zero and the
/// nonzero singular values; anything tighter is reported as ambiguous.
inline constexpr double kHealthyGap = 1e3;

struct OracleConfig {
    std::size_t grid = 128;    // N samples on [0, 1)
    double tolerance = 1e-8;   // relative singular-value threshold
    double mu_float = 1.0;     // |mu_float - mu| < 1e-12
};

/// Validates grid/tolerance and certifies mu_float from the twist.
OracleConfig make_oracle_config(const TwistScalar& mu, std::size_t grid = 128, double tolerance = 1e-8);

struct OracleResult {
    std::size_t degree = 0;
    std::size_t est_dim_K = 0;
    std::size_t est_dim_C = 0;
    /// Smallest nonzero singular value over the largest zero one; with no
    /// zero singular values, smallest singular value over the threshold.
    double singular_value_gap = 0.0;
    bool ambiguous = false;
};

/// Discretized twisted Gauss-Manin operator on Z-invariant sections of the
/// degree-k cohomology bundle:
///   (D s)_j = N (s_{j+1} - q s_j),  q = mu^{-1/N},  s_N := M_k^{-1} s_0,
/// a forward-difference scheme for s' - c s with c = -ln mu whose one-period
/// propagator q^N equals e^c exactly.
Eigen::MatrixXd twisted_difference_operator(const CohomologyModel& model, std::size_t k, const OracleConfig& cfg);

OracleResult discretized_novikov(const CohomologyModel& model, std::size_t k, const OracleConfig& cfg);

/// The s_0 block of the numerical null vector, normalized; requires est_dim_K = 1.
Eigen::VectorXd kernel_section_at_zero(const CohomologyModel& model, std::size_t k, const OracleConfig& cfg);

/// Uniform samples of a function on [t0, t1], endpoints included.
struct SampledFunction {
    double t0 = 0.0;
    double t1 = 1.0;
    std::vector<double> values;

    double step() const { return (t1 - t0) / static_cast<double>(values.size() - 1); }
    double time(std::size_t i) const { return t0 + step() * static_cast<double>(i); }
};

SampledFunction sample(double t0, double t1, std::size_t intervals, const auto& fn) {
    SampledFunction s{t0, t1, {}};
    s.values.resize(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) s.values[i] = fn(s.time(i));
    return s;
}

struct OdeSolution {
    SampledFunction f;
    double residual = 0.0;  // max |f' - c f - g| at interior samples
};

/// f(t) = e^{ct} (int_0^t g(s) e^{-cs} ds + K) by cumulative trapezoid.
OdeSolution ode_particular(double c, const SampledFunction& g, double K);

struct PeriodicSolution {
    SampledFunction g;
    double periodicity_residual = 0.0;  // |g(1) - g(0)|
    double pointwise_residual = 0.0;    // max |g' + lambda g - l|
    double bound = 0.0;                 // 10 h^2 max|l|
    bool within_bound() const { return periodicity_residual < bound && pointwise_residual < bound; }
};

/// Unique periodic g with l = g' + lambda g:
///   g(t) = e^{-lambda t} (int_0^t l e^{lambda s} ds + C),
///   C = e^{-lambda} / (1 - e^{-lambda}) int_0^1 l e^{lambda s} ds.
/// Throws Invalid for lambda = 0 or non-periodic samples.
PeriodicSolution ode2_periodic_solve(double lambda, const SampledFunction& l);

struct CrosscheckRow {
    std::size_t degree = 0;
    std::size_t exact_dim_K = 0;
    std::size_t exact_dim_C = 0;
    OracleResult estimate;
    bool match() const {
        return !estimate.ambiguous && estimate.est_dim_K == exact_dim_K && estimate.est_dim_C == exact_dim_C;
    }
};

struct CrosscheckReport {
    OracleConfig config;
    std::vector<CrosscheckRow> rows;
    bool pass() const;
};

CrosscheckReport crosscheck(const CohomologyModel& model, const TwistScalar& mu, const OracleConfig& cfg);

}  // namespace mnc
