#ifndef TUBECAST_PREDICTOR_HPP
#define TUBECAST_PREDICTOR_HPP

#include <vector>

#include <Eigen/Dense>

#include "tubecast/acvf.hpp"
#include "tubecast/model.hpp"

namespace tubecast {

/// Best-linear-predictor coefficients for the filtered process Y at every
/// step 1..horizon.  coeffs[i-1][k-1] is a_k^i, the weight of Y_{n+1-k}
/// when predicting Y_{n+i}; intercepts are identically zero because the
/// pipeline predicts the centered (zero-mean) process.
struct PredictorCoefficients {
    int horizon = 0;
    int n_eff = 0;
    std::vector<Eigen::VectorXd> coeffs;
    std::vector<double> intercepts;
};

/// Block analog: coeffs[i-1][k-1] is the m x m matrix A_k^i.
struct BlockPredictorCoefficients {
    int horizon = 0;
    int n_eff = 0;
    int dim = 1;
    std::vector<std::vector<Eigen::MatrixXd>> coeffs;
};

/// Point forecasts, one row per step ahead, one column per coordinate.
struct ForecastVector {
    Eigen::MatrixXd values;

    int horizon() const { return static_cast<int>(values.rows()); }
    int width() const { return static_cast<int>(values.cols()); }
};

/// Solves the projection system Gram * a = (gamma(i), ..., gamma(i+n_eff-1))
/// for each step i <= horizon, where Gram is the n_eff x n_eff Toeplitz
/// matrix of acvf values.  Uses a pivoted Cholesky (LDLT) factorization and
/// falls back to the minimum-norm least-squares solution when the smallest
/// pivot drops below 1e-12 times the largest Gram diagonal.  Throws
/// NumericError if the solution is non-finite or the relative residual
/// exceeds 1e-9.
PredictorCoefficients solve_blp(const AcvfTable& acvf, int n_eff, int horizon);

/// Block form: solves sum_j A_j^i Gamma(k-j) = Gamma(i+k-1) for k=1..n_eff
/// as one dense (m*n_eff) x (m*n_eff) system per step.
BlockPredictorCoefficients solve_blp(const MatrixAcvfTable& acvf, int n_eff, int horizon);

/// Y_t = X_t - sum_i phi_i X_{t-i} for t = p+1..n; no centering is applied.
SeriesWindow compute_y_series(const SeriesWindow& window, const UnivariateArmaSpec& spec);
SeriesWindow compute_y_series(const SeriesWindow& window, const VarmaSpec& spec);

/// Point forecasts P_n X_{n+1..n+horizon} for a stationary ARMA window.
/// The window is centered by the process mean, Y is predicted with the
/// given coefficients, the AR recursion fills in the X forecasts (observed
/// values are used wherever the lag reaches back into the window), and the
/// mean is restored on output.
ForecastVector forecast_mean(const SeriesWindow& window, const UnivariateArmaSpec& spec,
                             int horizon, const PredictorCoefficients& coeffs);
ForecastVector forecast_mean(const SeriesWindow& window, const VarmaSpec& spec,
                             int horizon, const BlockPredictorCoefficients& coeffs);

/// ARIMA forecasts: forecasts the d-times differenced window, then lifts
/// through the binomial reconstruction, substituting observed values for
/// steps that are already in the window.  The coefficient-taking overloads
/// expect coefficients solved for the differenced process and exist so
/// that bulk callers can solve the projection system once.
ForecastVector forecast_mean_arima(const SeriesWindow& window, const ArimaSpec& spec, int horizon);
ForecastVector forecast_mean_arima(const SeriesWindow& window, const ArimaSpec& spec, int horizon,
                                   const PredictorCoefficients& coeffs);
ForecastVector forecast_mean_arima(const SeriesWindow& window, const VarmaSpec& spec, int horizon);
ForecastVector forecast_mean_arima(const SeriesWindow& window, const VarmaSpec& spec, int horizon,
                                   const BlockPredictorCoefficients& coeffs);

/// Convenience: solves the projection system implied by (spec, n) at the
/// given horizon.  n is the undifferenced window length.
PredictorCoefficients solve_blp_for(const ArimaSpec& spec, int n, int horizon);
BlockPredictorCoefficients solve_blp_for(const VarmaSpec& spec, int n, int horizon);

} // namespace tubecast

#endif
