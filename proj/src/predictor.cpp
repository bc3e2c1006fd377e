#include "tubecast/predictor.hpp"

#include <cmath>
#include <sstream>

#include "tubecast/differencing.hpp"
#include "tubecast/errors.hpp"

namespace tubecast {

namespace {

constexpr double kPivotRatio = 1e-12;
constexpr double kResidualTol = 1e-9;

void check_solution(const Eigen::MatrixXd& gram, const Eigen::MatrixXd& solution,
                    const Eigen::MatrixXd& rhs, int step) {
    if (!solution.allFinite()) {
        std::ostringstream os;
        os << "projection solve produced a non-finite result at step " << step;
        throw NumericError(os.str());
    }
    const double residual = (gram * solution - rhs).norm();
    const double scale = std::max(1.0, rhs.norm());
    if (residual > kResidualTol * scale) {
        std::ostringstream os;
        os << "projection solve residual " << residual / scale
           << " exceeds tolerance at step " << step;
        throw NumericError(os.str());
    }
}

// Solves gram * x = rhs for a symmetric PSD gram matrix.  LDLT pivots are
// inspected; a near-singular factorization is replaced by the minimum-norm
// least-squares solution.
Eigen::MatrixXd solve_psd(const Eigen::MatrixXd& gram, const Eigen::MatrixXd& rhs) {
    Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    const double max_diag = gram.diagonal().maxCoeff();
    const bool degenerate = ldlt.info() != Eigen::Success ||
                            ldlt.vectorD().minCoeff() < kPivotRatio * max_diag;
    if (!degenerate) return ldlt.solve(rhs);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(gram);
    return cod.solve(rhs);
}

std::vector<double> binomial_signs(int d) {
    // C(d,k) * (-1)^k for k = 0..d
    std::vector<double> w(static_cast<std::size_t>(d) + 1);
    double c = 1.0;
    for (int k = 0; k <= d; ++k) {
        w[static_cast<std::size_t>(k)] = (k % 2 == 0) ? c : -c;
        c = c * (d - k) / (k + 1);
    }
    return w;
}

} // namespace

PredictorCoefficients solve_blp(const AcvfTable& acvf, int n_eff, int horizon) {
    if (n_eff < 1) throw DimensionError("n_eff must be at least 1");
    if (horizon < 1) throw DimensionError("horizon must be at least 1");
    if (acvf.max_lag < n_eff + horizon - 1) {
        std::ostringstream os;
        os << "acvf table covers lags up to " << acvf.max_lag << ", need "
           << n_eff + horizon - 1;
        throw DimensionError(os.str());
    }

    Eigen::MatrixXd gram(n_eff, n_eff);
    for (int i = 0; i < n_eff; ++i)
        for (int j = 0; j < n_eff; ++j) gram(i, j) = acvf.at(std::abs(i - j));

    Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    const double max_diag = gram.diagonal().maxCoeff();
    const bool degenerate = ldlt.info() != Eigen::Success ||
                            ldlt.vectorD().minCoeff() < kPivotRatio * max_diag;
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
    if (degenerate) cod.compute(gram);

    PredictorCoefficients result;
    result.horizon = horizon;
    result.n_eff = n_eff;
    result.coeffs.reserve(static_cast<std::size_t>(horizon));
    result.intercepts.assign(static_cast<std::size_t>(horizon), 0.0);
    for (int step = 1; step <= horizon; ++step) {
        Eigen::VectorXd rhs(n_eff);
        for (int k = 0; k < n_eff; ++k) rhs(k) = acvf.at(step + k);
        Eigen::VectorXd a = degenerate ? cod.solve(rhs).eval() : ldlt.solve(rhs).eval();
        check_solution(gram, a, rhs, step);
        result.coeffs.push_back(std::move(a));
    }
    return result;
}

BlockPredictorCoefficients solve_blp(const MatrixAcvfTable& acvf, int n_eff, int horizon) {
    if (n_eff < 1) throw DimensionError("n_eff must be at least 1");
    if (horizon < 1) throw DimensionError("horizon must be at least 1");
    if (acvf.max_lag < n_eff + horizon - 1) {
        std::ostringstream os;
        os << "acvf table covers lags up to " << acvf.max_lag << ", need "
           << n_eff + horizon - 1;
        throw DimensionError(os.str());
    }
    const int m = acvf.dim;

    // Gram block (k, j) = Gamma(j - k) = Cov of the stacked regressors
    // (Y_n, Y_{n-1}, ..., Y_{p+1}); symmetric as a whole.
    Eigen::MatrixXd gram(m * n_eff, m * n_eff);
    for (int k = 0; k < n_eff; ++k)
        for (int j = 0; j < n_eff; ++j)
            gram.block(k * m, j * m, m, m) = acvf.at(j - k);

    BlockPredictorCoefficients result;
    result.horizon = horizon;
    result.n_eff = n_eff;
    result.dim = m;
    result.coeffs.reserve(static_cast<std::size_t>(horizon));
    for (int step = 1; step <= horizon; ++step) {
        // Row equations sum_j A_j Gamma(k-j) = Gamma(step+k-1) transpose into
        // gram * X = rhs with X holding the A_j^T stacked vertically.
        Eigen::MatrixXd rhs(m * n_eff, m);
        for (int k = 0; k < n_eff; ++k)
            rhs.block(k * m, 0, m, m) = acvf.at(step + k).transpose();
        Eigen::MatrixXd x = solve_psd(gram, rhs);
        check_solution(gram, x, rhs, step);
        std::vector<Eigen::MatrixXd> row;
        row.reserve(static_cast<std::size_t>(n_eff));
        for (int j = 0; j < n_eff; ++j)
            row.push_back(x.block(j * m, 0, m, m).transpose());
        result.coeffs.push_back(std::move(row));
    }
    return result;
}

SeriesWindow compute_y_series(const SeriesWindow& window, const UnivariateArmaSpec& spec) {
    if (window.width() != 1) throw DimensionError("univariate filter expects one column");
    const int n = window.length();
    const int p = spec.p;
    if (n < p + 1) throw DimensionError("window too short for the AR filter");

    Eigen::MatrixXd y(n - p, 1);
    for (int t = p; t < n; ++t) {
        double v = window.values(t, 0);
        for (int i = 1; i <= p; ++i)
            v -= spec.phi[static_cast<std::size_t>(i - 1)] * window.values(t - i, 0);
        y(t - p, 0) = v;
    }
    return SeriesWindow(std::move(y));
}

SeriesWindow compute_y_series(const SeriesWindow& window, const VarmaSpec& spec) {
    if (window.width() != spec.m) throw DimensionError("window width does not match m");
    const int n = window.length();
    const int p = spec.p;
    if (n < p + 1) throw DimensionError("window too short for the AR filter");

    Eigen::MatrixXd y(n - p, spec.m);
    for (int t = p; t < n; ++t) {
        Eigen::VectorXd v = window.values.row(t).transpose();
        for (int i = 1; i <= p; ++i)
            v -= spec.Phi[static_cast<std::size_t>(i - 1)] *
                 window.values.row(t - i).transpose();
        y.row(t - p) = v.transpose();
    }
    return SeriesWindow(std::move(y));
}

ForecastVector forecast_mean(const SeriesWindow& window, const UnivariateArmaSpec& spec,
                             int horizon, const PredictorCoefficients& coeffs) {
    if (window.width() != 1) throw DimensionError("univariate forecast expects one column");
    const int n = window.length();
    const int p = spec.p;
    const int n_eff = n - p;
    if (coeffs.n_eff != n_eff || coeffs.horizon < horizon)
        throw DimensionError("predictor coefficients do not match window/horizon");

    // Work on the centered series; the mean is restored at the end.
    Eigen::VectorXd xc = window.values.col(0).array() - spec.mean;
    Eigen::VectorXd y(n_eff);
    for (int t = p; t < n; ++t) {
        double v = xc(t);
        for (int i = 1; i <= p; ++i) v -= spec.phi[static_cast<std::size_t>(i - 1)] * xc(t - i);
        y(t - p) = v;
    }

    ForecastVector out;
    out.values.resize(horizon, 1);
    std::vector<double> px(static_cast<std::size_t>(horizon));
    for (int i = 1; i <= horizon; ++i) {
        const Eigen::VectorXd& a = coeffs.coeffs[static_cast<std::size_t>(i - 1)];
        double py = 0.0;
        for (int k = 1; k <= n_eff; ++k) py += a(k - 1) * y(n_eff - k);
        double v = py;
        for (int k = 1; k <= std::min(p, i - 1); ++k)
            v += spec.phi[static_cast<std::size_t>(k - 1)] * px[static_cast<std::size_t>(i - k - 1)];
        for (int k = i; k <= p; ++k)
            v += spec.phi[static_cast<std::size_t>(k - 1)] * xc(n + i - k - 1);
        px[static_cast<std::size_t>(i - 1)] = v;
        out.values(i - 1, 0) = v + spec.mean;
    }
    return out;
}

ForecastVector forecast_mean(const SeriesWindow& window, const VarmaSpec& spec,
                             int horizon, const BlockPredictorCoefficients& coeffs) {
    if (window.width() != spec.m) throw DimensionError("window width does not match m");
    const int n = window.length();
    const int p = spec.p;
    const int m = spec.m;
    const int n_eff = n - p;
    if (coeffs.n_eff != n_eff || coeffs.horizon < horizon || coeffs.dim != m)
        throw DimensionError("predictor coefficients do not match window/horizon");

    Eigen::VectorXd mu = spec.mean.size() == m ? spec.mean : Eigen::VectorXd::Zero(m);
    Eigen::MatrixXd xc = window.values;
    xc.rowwise() -= mu.transpose();

    Eigen::MatrixXd y(n_eff, m);
    for (int t = p; t < n; ++t) {
        Eigen::VectorXd v = xc.row(t).transpose();
        for (int i = 1; i <= p; ++i)
            v -= spec.Phi[static_cast<std::size_t>(i - 1)] * xc.row(t - i).transpose();
        y.row(t - p) = v.transpose();
    }

    ForecastVector out;
    out.values.resize(horizon, m);
    std::vector<Eigen::VectorXd> px(static_cast<std::size_t>(horizon));
    for (int i = 1; i <= horizon; ++i) {
        const auto& a = coeffs.coeffs[static_cast<std::size_t>(i - 1)];
        Eigen::VectorXd v = Eigen::VectorXd::Zero(m);
        for (int k = 1; k <= n_eff; ++k)
            v += a[static_cast<std::size_t>(k - 1)] * y.row(n_eff - k).transpose();
        for (int k = 1; k <= std::min(p, i - 1); ++k)
            v += spec.Phi[static_cast<std::size_t>(k - 1)] * px[static_cast<std::size_t>(i - k - 1)];
        for (int k = i; k <= p; ++k)
            v += spec.Phi[static_cast<std::size_t>(k - 1)] * xc.row(n + i - k - 1).transpose();
        px[static_cast<std::size_t>(i - 1)] = v;
        out.values.row(i - 1) = (v + mu).transpose();
    }
    return out;
}

ForecastVector forecast_mean_arima(const SeriesWindow& window, const ArimaSpec& spec,
                                   int horizon, const PredictorCoefficients& coeffs) {
    check_window(window, spec);
    if (spec.d == 0) return forecast_mean(window, spec.arma, horizon, coeffs);

    const SeriesWindow diffed = difference(window, spec.d);
    const ForecastVector inner = forecast_mean(diffed, spec.arma, horizon, coeffs);

    const int n = window.length();
    const auto w = binomial_signs(spec.d);
    ForecastVector out;
    out.values.resize(horizon, 1);
    for (int i = 1; i <= horizon; ++i) {
        double v = inner.values(i - 1, 0);
        for (int k = 1; k <= spec.d; ++k) {
            const int offset = i - k; // lead of the referenced X value
            const double xv = offset <= 0 ? window.values(n + offset - 1, 0)
                                          : out.values(offset - 1, 0);
            v -= w[static_cast<std::size_t>(k)] * xv;
        }
        out.values(i - 1, 0) = v;
    }
    return out;
}

ForecastVector forecast_mean_arima(const SeriesWindow& window, const ArimaSpec& spec, int horizon) {
    return forecast_mean_arima(window, spec, horizon, solve_blp_for(spec, window.length(), horizon));
}

ForecastVector forecast_mean_arima(const SeriesWindow& window, const VarmaSpec& spec,
                                   int horizon, const BlockPredictorCoefficients& coeffs) {
    check_window(window, spec);
    VarmaSpec stationary = spec;
    stationary.d = 0;
    if (spec.d == 0) return forecast_mean(window, stationary, horizon, coeffs);

    const SeriesWindow diffed = difference(window, spec.d);
    const ForecastVector inner = forecast_mean(diffed, stationary, horizon, coeffs);

    const int n = window.length();
    const auto w = binomial_signs(spec.d);
    ForecastVector out;
    out.values.resize(horizon, spec.m);
    for (int i = 1; i <= horizon; ++i) {
        Eigen::RowVectorXd v = inner.values.row(i - 1);
        for (int k = 1; k <= spec.d; ++k) {
            const int offset = i - k;
            const Eigen::RowVectorXd xv = offset <= 0 ? window.values.row(n + offset - 1)
                                                      : out.values.row(offset - 1);
            v -= w[static_cast<std::size_t>(k)] * xv;
        }
        out.values.row(i - 1) = v;
    }
    return out;
}

ForecastVector forecast_mean_arima(const SeriesWindow& window, const VarmaSpec& spec, int horizon) {
    return forecast_mean_arima(window, spec, horizon, solve_blp_for(spec, window.length(), horizon));
}

PredictorCoefficients solve_blp_for(const ArimaSpec& spec, int n, int horizon) {
    const int n_eff = n - spec.d - spec.arma.p;
    if (n_eff < 1) throw DimensionError("window too short for the predictor system");
    const AcvfTable table =
        ma_acvf(spec.arma.theta, spec.arma.sigma2, n_eff + horizon - 1);
    return solve_blp(table, n_eff, horizon);
}

BlockPredictorCoefficients solve_blp_for(const VarmaSpec& spec, int n, int horizon) {
    const int n_eff = n - spec.d - spec.p;
    if (n_eff < 1) throw DimensionError("window too short for the predictor system");
    const MatrixAcvfTable table = vma_acvf(spec.Theta, spec.sigma_z, n_eff + horizon - 1);
    return solve_blp(table, n_eff, horizon);
}

} // namespace tubecast
