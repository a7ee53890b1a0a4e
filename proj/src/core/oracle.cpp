#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "linalg.hpp"

namespace mnc {

OracleConfig make_oracle_config(const TwistScalar& mu, std::size_t grid, double tolerance) {
    if (grid < 8) throw invalid("oracle grid must have N >= 8");
    if (!(tolerance > 0.0 && tolerance < 1.0)) throw invalid("oracle tolerance must lie in (0, 1)");
    if (mu.sign() != Sign::Positive) throw Error(ErrorCode::Numeric, "oracle needs mu > 0 (c = -ln mu)");
    OracleConfig cfg;
    cfg.grid = grid;
    cfg.tolerance = tolerance;
    cfg.mu_float = mu.approx(Rational(1, mpz_class("10000000000000")));
    return cfg;
}

namespace {

Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_double();
    return out;
}

void check_config(const OracleConfig& cfg) {
    if (cfg.grid < 8) throw invalid("oracle grid must have N >= 8");
    if (!(cfg.tolerance > 0.0 && cfg.tolerance < 1.0)) throw invalid("oracle tolerance must lie in (0, 1)");
    if (!(cfg.mu_float > 0.0) || !std::isfinite(std::log(cfg.mu_float)))
        throw Error(ErrorCode::Numeric, "oracle needs mu > 0 (c = -ln mu)");
}

}  // namespace

Eigen::MatrixXd twisted_difference_operator(const CohomologyModel& model, std::size_t k, const OracleConfig& cfg) {
    check_config(cfg);
    if (k > model.top_degree) throw invalid("degree out of range");
    const auto b = static_cast<Eigen::Index>(model.betti[k]);
    const auto n = static_cast<Eigen::Index>(cfg.grid);
    const double N = static_cast<double>(cfg.grid);
    const double q = std::pow(cfg.mu_float, -1.0 / N);
    const Eigen::MatrixXd minv = to_eigen(inverse(RationalField{}, model.map(k)));
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n * b, n * b);
    for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::Index row = j * b;
        d.block(row, row, b, b) -= N * q * Eigen::MatrixXd::Identity(b, b);
        if (j + 1 < n)
            d.block(row, row + b, b, b) += N * Eigen::MatrixXd::Identity(b, b);
        else
            d.block(row, 0, b, b) += N * minv;
    }
    return d;
}

OracleResult discretized_novikov(const CohomologyModel& model, std::size_t k, const OracleConfig& cfg) {
    const Eigen::MatrixXd d = twisted_difference_operator(model, k, cfg);
    OracleResult r;
    r.degree = k;
    if (d.size() == 0) {
        r.singular_value_gap = std::numeric_limits<double>::infinity();
        return r;
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(d);
    const Eigen::VectorXd s = svd.singularValues();  // decreasing
    const double threshold = cfg.tolerance * s(0);
    const auto n = static_cast<std::size_t>(s.size());
    std::size_t zeros = 0;
    while (zeros < n && s(static_cast<Eigen::Index>(n - 1 - zeros)) < threshold) ++zeros;
    r.est_dim_K = zeros;
    r.est_dim_C = zeros;  // square operator: co-nullity equals nullity
    if (zeros == n) {
        r.singular_value_gap = 0.0;
    } else if (zeros == 0) {
        r.singular_value_gap = s(static_cast<Eigen::Index>(n - 1)) / threshold;
    } else {
        const double smallest_nonzero = s(static_cast<Eigen::Index>(n - 1 - zeros));
        const double largest_zero = s(static_cast<Eigen::Index>(n - zeros));
        r.singular_value_gap =
            largest_zero > 0.0 ? smallest_nonzero / largest_zero : std::numeric_limits<double>::infinity();
    }
    r.ambiguous = r.singular_value_gap < kHealthyGap;
    return r;
}

Eigen::VectorXd kernel_section_at_zero(const CohomologyModel& model, std::size_t k, const OracleConfig& cfg) {
    const Eigen::MatrixXd d = twisted_difference_operator(model, k, cfg);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(d, Eigen::ComputeThinV);
    const Eigen::Index last = svd.singularValues().size() - 1;
    const auto b = static_cast<Eigen::Index>(model.betti[k]);
    Eigen::VectorXd v = svd.matrixV().col(last).head(b);
    return v.normalized();
}

OdeSolution ode_particular(double c, const SampledFunction& g, double K) {
    if (g.values.size() < 3) throw invalid("need at least three samples");
    const std::size_t n = g.values.size();
    const double h = g.step();
    OdeSolution out;
    out.f = g;
    double integral = 0.0;
    double prev = g.values[0] * std::exp(-c * g.t0);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = g.time(i);
        const double cur = g.values[i] * std::exp(-c * t);
        if (i > 0) integral += 0.5 * h * (prev + cur);
        prev = cur;
        out.f.values[i] = std::exp(c * t) * (integral + K);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double df = (out.f.values[i + 1] - out.f.values[i - 1]) / (2.0 * h);
        out.residual = std::max(out.residual, std::abs(df - c * out.f.values[i] - g.values[i]));
    }
    return out;
}

PeriodicSolution ode2_periodic_solve(double lambda, const SampledFunction& l) {
    if (lambda == 0.0)
        throw invalid("lambda = 0: g' = l has no periodic solution unless l has zero mean");
    if (l.values.size() < 9) throw invalid("need at least nine samples");
    if (l.t0 != 0.0 || l.t1 != 1.0) throw invalid("samples must cover one period [0, 1]");
    const std::size_t n = l.values.size() - 1;  // intervals
    double lmax = 0.0;
    for (double v : l.values) lmax = std::max(lmax, std::abs(v));
    if (std::abs(l.values.front() - l.values.back()) > 1e-9 * std::max(1.0, lmax))
        throw invalid("samples are not periodic: l(0) != l(1)");
    const double h = l.step();

    std::vector<double> cumulative(n + 1, 0.0);
    for (std::size_t i = 1; i <= n; ++i) {
        const double a = l.values[i - 1] * std::exp(lambda * l.time(i - 1));
        const double b = l.values[i] * std::exp(lambda * l.time(i));
        cumulative[i] = cumulative[i - 1] + 0.5 * h * (a + b);
    }
    const double C = std::exp(-lambda) / (1.0 - std::exp(-lambda)) * cumulative[n];

    PeriodicSolution out;
    out.g = l;
    for (std::size_t i = 0; i <= n; ++i) out.g.values[i] = std::exp(-lambda * l.time(i)) * (cumulative[i] + C);
    out.periodicity_residual = std::abs(out.g.values[n] - out.g.values[0]);

    // Fourth-order centered differences with periodic wrap.
    auto at = [&](long i) {
        const long m = static_cast<long>(n);
        return out.g.values[static_cast<std::size_t>(((i % m) + m) % m)];
    };
    for (std::size_t i = 0; i < n; ++i) {
        const long j = static_cast<long>(i);
        const double dg = (-at(j + 2) + 8.0 * at(j + 1) - 8.0 * at(j - 1) + at(j - 2)) / (12.0 * h);
        out.pointwise_residual = std::max(out.pointwise_residual, std::abs(dg + lambda * out.g.values[i] - l.values[i]));
    }
    out.bound = 10.0 * h * h * lmax;
    return out;
}

bool CrosscheckReport::pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const CrosscheckRow& r) { return r.match(); });
}

CrosscheckReport crosscheck(const CohomologyModel& model, const TwistScalar& mu, const OracleConfig& cfg) {
    const auto exact = novikov_dims(model, mu);
    CrosscheckReport rep;
    rep.config = cfg;
    for (std::size_t k = 0; k <= model.top_degree; ++k) {
        CrosscheckRow row;
        row.degree = k;
        row.exact_dim_K = exact.dim_K[k];
        row.exact_dim_C = exact.dim_C[k];
        row.estimate = discretized_novikov(model, k, cfg);
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace mnc
