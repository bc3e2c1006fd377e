#include "tubecast/oracle.hpp"

#include <cmath>
#include <vector>

#include "tubecast/errors.hpp"
#include "tubecast/predictor.hpp"
#include "tubecast/random.hpp"

namespace tubecast {

namespace {

int burn_in_for(int p, int q) { return 50 * std::max(1, p + q); }

std::vector<double> binomial_signs(int d) {
    std::vector<double> w(static_cast<std::size_t>(d) + 1);
    double c = 1.0;
    for (int k = 0; k <= d; ++k) {
        w[static_cast<std::size_t>(k)] = (k % 2 == 0) ? c : -c;
        c = c * (d - k) / (k + 1);
    }
    return w;
}

// Generates one (n + horizon) x 1 path of the ARIMA process: the stationary
// part runs from zero history through the burn-in, the d-fold integration
// starts from zero constants (prediction errors are invariant to them).
void generate_path(const ArimaSpec& spec, int n, int horizon, std::uint64_t path_seed,
                   Eigen::MatrixXd& out) {
    const int p = spec.arma.p;
    const int q = spec.arma.q;
    const int d = spec.d;
    const int burn = burn_in_for(p, q);
    const int n_stat = n - d;
    const int total = burn + n_stat + horizon;
    const double sd = std::sqrt(spec.arma.sigma2);

    NormalStream stream(path_seed);
    std::vector<double> w(static_cast<std::size_t>(total));
    std::vector<double> z(static_cast<std::size_t>(total));
    for (int t = 0; t < total; ++t) {
        const double zt = sd * stream.next();
        z[static_cast<std::size_t>(t)] = zt;
        double v = zt;
        for (int j = 1; j <= std::min(q, t); ++j)
            v += spec.arma.theta[static_cast<std::size_t>(j - 1)] * z[static_cast<std::size_t>(t - j)];
        for (int i = 1; i <= std::min(p, t); ++i)
            v += spec.arma.phi[static_cast<std::size_t>(i - 1)] * w[static_cast<std::size_t>(t - i)];
        w[static_cast<std::size_t>(t)] = v;
    }

    out.resize(n + horizon, 1);
    if (d == 0) {
        for (int t = 0; t < n + horizon; ++t)
            out(t, 0) = w[static_cast<std::size_t>(burn + t)] + spec.arma.mean;
        return;
    }
    const auto signs = binomial_signs(d);
    for (int t = 0; t < d; ++t) out(t, 0) = 0.0;
    for (int t = d; t < n + horizon; ++t) {
        double v = w[static_cast<std::size_t>(burn + t - d)] + spec.arma.mean;
        for (int k = 1; k <= d; ++k)
            v -= signs[static_cast<std::size_t>(k)] * out(t - k, 0);
        out(t, 0) = v;
    }
}

void generate_path(const VarmaSpec& spec, int n, int horizon, std::uint64_t path_seed,
                   const Eigen::MatrixXd& innovation_root, Eigen::MatrixXd& out) {
    const int p = spec.p;
    const int q = spec.q;
    const int d = spec.d;
    const int m = spec.m;
    const int burn = burn_in_for(p, q);
    const int n_stat = n - d;
    const int total = burn + n_stat + horizon;
    const Eigen::VectorXd mu = spec.mean.size() == m ? spec.mean : Eigen::VectorXd::Zero(m);

    NormalStream stream(path_seed);
    Eigen::MatrixXd w(total, m);
    Eigen::MatrixXd z(total, m);
    Eigen::VectorXd u(m);
    for (int t = 0; t < total; ++t) {
        for (int c = 0; c < m; ++c) u(c) = stream.next();
        z.row(t) = (innovation_root * u).transpose();
        Eigen::RowVectorXd v = z.row(t);
        for (int j = 1; j <= std::min(q, t); ++j)
            v += z.row(t - j) * spec.Theta[static_cast<std::size_t>(j - 1)].transpose();
        for (int i = 1; i <= std::min(p, t); ++i)
            v += w.row(t - i) * spec.Phi[static_cast<std::size_t>(i - 1)].transpose();
        w.row(t) = v;
    }

    out.resize(n + horizon, m);
    if (d == 0) {
        for (int t = 0; t < n + horizon; ++t) out.row(t) = w.row(burn + t) + mu.transpose();
        return;
    }
    const auto signs = binomial_signs(d);
    for (int t = 0; t < d; ++t) out.row(t).setZero();
    for (int t = d; t < n + horizon; ++t) {
        Eigen::RowVectorXd v = w.row(burn + t - d) + mu.transpose();
        for (int k = 1; k <= d; ++k)
            v -= signs[static_cast<std::size_t>(k)] * out.row(t - k);
        out.row(t) = v;
    }
}

double kahan_total(const std::vector<double>& values) {
    double sum = 0.0;
    double comp = 0.0;
    for (double v : values) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

} // namespace

SimulationEnsemble simulate_paths(const ArimaSpec& spec, int n, int horizon,
                                  int paths, std::uint64_t seed) {
    if (paths < 1) throw DimensionError("paths must be at least 1");
    if (horizon < 1) throw DimensionError("horizon must be at least 1");
    const int min_len = spec.arma.p + spec.arma.q + spec.d + 1;
    if (n < min_len) throw DimensionError("window too short for the spec");

    const PredictorCoefficients coeffs = solve_blp_for(spec, n, horizon);

    SimulationEnsemble ensemble;
    ensemble.paths = paths;
    ensemble.seed = seed;
    ensemble.burn_in = burn_in_for(spec.arma.p, spec.arma.q);
    ensemble.horizon = horizon;
    ensemble.dim = horizon;
    ensemble.errors.resize(paths, horizon);

    Eigen::MatrixXd path;
    for (int k = 0; k < paths; ++k) {
        generate_path(spec, n, horizon, mix_seed(seed, static_cast<std::uint64_t>(k)), path);
        SeriesWindow window(Eigen::MatrixXd(path.topRows(n)));
        const ForecastVector forecast = forecast_mean_arima(window, spec, horizon, coeffs);
        for (int i = 0; i < horizon; ++i)
            ensemble.errors(k, i) = forecast.values(i, 0) - path(n + i, 0);
    }
    return ensemble;
}

SimulationEnsemble simulate_paths(const VarmaSpec& spec, int n, int horizon,
                                  int paths, std::uint64_t seed) {
    if (paths < 1) throw DimensionError("paths must be at least 1");
    if (horizon < 1) throw DimensionError("horizon must be at least 1");
    const int min_len = spec.p + spec.q + spec.d + 1;
    if (n < min_len) throw DimensionError("window too short for the spec");

    const int m = spec.m;
    const BlockPredictorCoefficients coeffs = solve_blp_for(spec, n, horizon);
    Eigen::LLT<Eigen::MatrixXd> llt(spec.sigma_z);
    if (llt.info() != Eigen::Success)
        throw NumericError("sigmaZ is not positive definite");
    const Eigen::MatrixXd root = llt.matrixL();

    SimulationEnsemble ensemble;
    ensemble.paths = paths;
    ensemble.seed = seed;
    ensemble.burn_in = burn_in_for(spec.p, spec.q);
    ensemble.horizon = horizon;
    ensemble.dim = m * horizon;
    ensemble.errors.resize(paths, ensemble.dim);

    Eigen::MatrixXd path;
    for (int k = 0; k < paths; ++k) {
        generate_path(spec, n, horizon, mix_seed(seed, static_cast<std::uint64_t>(k)), root, path);
        SeriesWindow window(Eigen::MatrixXd(path.topRows(n)));
        const ForecastVector forecast = forecast_mean_arima(window, spec, horizon, coeffs);
        for (int i = 0; i < horizon; ++i)
            for (int c = 0; c < m; ++c)
                ensemble.errors(k, i * m + c) = forecast.values(i, c) - path(n + i, c);
    }
    return ensemble;
}

Eigen::MatrixXd simulate_one_path(const ArimaSpec& spec, int n, int horizon,
                                  std::uint64_t seed, int path_index) {
    Eigen::MatrixXd path;
    generate_path(spec, n, horizon, mix_seed(seed, static_cast<std::uint64_t>(path_index)), path);
    return path;
}

Eigen::MatrixXd simulate_one_path(const VarmaSpec& spec, int n, int horizon,
                                  std::uint64_t seed, int path_index) {
    Eigen::LLT<Eigen::MatrixXd> llt(spec.sigma_z);
    if (llt.info() != Eigen::Success)
        throw NumericError("sigmaZ is not positive definite");
    Eigen::MatrixXd path;
    generate_path(spec, n, horizon, mix_seed(seed, static_cast<std::uint64_t>(path_index)),
                  Eigen::MatrixXd(llt.matrixL()), path);
    return path;
}

EmpiricalCovariance empirical_error_covariance(const SimulationEnsemble& ensemble) {
    const int dim = ensemble.dim;
    const long long n = ensemble.paths;
    if (n < 2) throw DimensionError("need at least two paths for a covariance");

    EmpiricalCovariance out;
    out.paths = n;
    out.mean.resize(dim);
    out.mean_se.resize(dim);
    out.cov.resize(dim, dim);
    out.se.resize(dim, dim);

    std::vector<double> column(static_cast<std::size_t>(n));
    for (int j = 0; j < dim; ++j) {
        for (long long k = 0; k < n; ++k)
            column[static_cast<std::size_t>(k)] = ensemble.errors(k, j);
        out.mean(j) = kahan_total(column) / static_cast<double>(n);
    }

    std::vector<double> products(static_cast<std::size_t>(n));
    std::vector<double> squares(static_cast<std::size_t>(n));
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            for (long long k = 0; k < n; ++k) {
                const double w = (ensemble.errors(k, i) - out.mean(i)) *
                                 (ensemble.errors(k, j) - out.mean(j));
                products[static_cast<std::size_t>(k)] = w;
                squares[static_cast<std::size_t>(k)] = w * w;
            }
            const double sum_w = kahan_total(products);
            const double sum_w2 = kahan_total(squares);
            const double cov = sum_w / static_cast<double>(n - 1);
            const double var_w =
                std::max(0.0, (sum_w2 - sum_w * sum_w / static_cast<double>(n)) /
                                  static_cast<double>(n - 1));
            const double se = std::sqrt(var_w / static_cast<double>(n));
            out.cov(i, j) = cov;
            out.cov(j, i) = cov;
            out.se(i, j) = se;
            out.se(j, i) = se;
        }
    }
    for (int j = 0; j < dim; ++j)
        out.mean_se(j) = std::sqrt(out.cov(j, j) / static_cast<double>(n));
    return out;
}

ComparisonReport compare_covariance(const Eigen::MatrixXd& analytic,
                                    const Eigen::MatrixXd& empirical,
                                    const Eigen::MatrixXd& se, double z_threshold) {
    if (analytic.rows() != empirical.rows() || analytic.cols() != empirical.cols() ||
        analytic.rows() != se.rows() || analytic.cols() != se.cols())
        throw DimensionError("covariance comparison requires matching shapes");

    ComparisonReport report;
    report.threshold = z_threshold;
    report.z.resize(analytic.rows(), analytic.cols());
    for (Eigen::Index i = 0; i < analytic.rows(); ++i) {
        for (Eigen::Index j = 0; j < analytic.cols(); ++j) {
            const double diff = empirical(i, j) - analytic(i, j);
            if (se(i, j) > 0.0)
                report.z(i, j) = diff / se(i, j);
            else
                report.z(i, j) = diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        }
    }
    report.max_abs_z = report.z.cwiseAbs().maxCoeff();
    const double denom = analytic.norm();
    report.frobenius_rel_error =
        (empirical - analytic).norm() / (denom > 0.0 ? denom : 1.0);
    report.pass = report.max_abs_z <= z_threshold;
    return report;
}

} // namespace tubecast
