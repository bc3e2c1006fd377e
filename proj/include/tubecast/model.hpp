#ifndef TUBECAST_MODEL_HPP
#define TUBECAST_MODEL_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tubecast/errors.hpp"

namespace tubecast {

/// ARMA(p,q) with known parameters.  All downstream computations treat the
/// coefficients as ground truth; nothing here is estimated.
struct UnivariateArmaSpec {
    int p = 0;                 ///< AR order
    int q = 0;                 ///< MA order
    std::vector<double> phi;   ///< AR coefficients phi_1..phi_p
    std::vector<double> theta; ///< MA coefficients theta_1..theta_q
    double sigma2 = 1.0;       ///< innovation variance, > 0
    double mean = 0.0;         ///< process mean
};

/// ARIMA(p,d,q): `arma` models the d-times differenced process.
/// d == 0 behaves exactly like the plain ARMA spec.
struct ArimaSpec {
    UnivariateArmaSpec arma;
    int d = 0;
};

/// Vector ARMA/ARIMA with m-dimensional values and m x m coefficient
/// matrices.  sigma_z is the innovation covariance (symmetric positive
/// definite); with m == 1 the whole pipeline reproduces the univariate
/// results.
struct VarmaSpec {
    int m = 1;
    int p = 0;
    int q = 0;
    int d = 0;
    std::vector<Eigen::MatrixXd> Phi;   ///< Phi_1..Phi_p, each m x m
    std::vector<Eigen::MatrixXd> Theta; ///< Theta_1..Theta_q, each m x m
    Eigen::MatrixXd sigma_z;            ///< m x m innovation covariance
    Eigen::VectorXd mean;               ///< length-m process mean
};

/// Observed window X_1..X_n, one row per time step, one column per
/// coordinate (a single column in the univariate case).  Immutable once
/// constructed; every consumer takes it by const reference.
struct SeriesWindow {
    Eigen::MatrixXd values;

    SeriesWindow() = default;
    explicit SeriesWindow(Eigen::MatrixXd v) : values(std::move(v)) {}
    explicit SeriesWindow(const Eigen::VectorXd& v) : values(v) {}

    int length() const { return static_cast<int>(values.rows()); }
    int width() const { return static_cast<int>(values.cols()); }
};

enum class Severity { Warning, Error };

struct ValidationIssue {
    Severity severity;
    std::string message;
};

/// Outcome of validate_spec.  Structural problems are hard errors;
/// causality/invertibility findings are advisory warnings only.
struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const;
    bool has_warnings() const;
    void add_error(std::string msg);
    void add_warning(std::string msg);
};

ValidationReport validate_spec(const UnivariateArmaSpec& spec);
ValidationReport validate_spec(const ArimaSpec& spec);
ValidationReport validate_spec(const VarmaSpec& spec);

/// Throws DimensionError unless the window is long enough for the spec
/// (n >= p + q + d + 1), has the right width, and contains only finite
/// values.
void check_window(const SeriesWindow& window, const ArimaSpec& spec);
void check_window(const SeriesWindow& window, const VarmaSpec& spec);

/// Largest companion-matrix eigenvalue modulus of the AR polynomial
/// 1 - phi_1 z - ... - phi_p z^p (univariate) or its block analog.
/// Values >= 1 mean some polynomial root lies inside or on the unit
/// circle, i.e. the process is not causal.
double ar_companion_spectral_radius(const std::vector<double>& phi);
double ar_companion_spectral_radius(const std::vector<Eigen::MatrixXd>& Phi, int m);

/// Same check for the MA polynomial 1 + theta_1 z + ... + theta_q z^q
/// (invertibility).
double ma_companion_spectral_radius(const std::vector<double>& theta);
double ma_companion_spectral_radius(const std::vector<Eigen::MatrixXd>& Theta, int m);

} // namespace tubecast

#endif
