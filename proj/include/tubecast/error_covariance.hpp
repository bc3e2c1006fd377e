#ifndef TUBECAST_ERROR_COVARIANCE_HPP
#define TUBECAST_ERROR_COVARIANCE_HPP

#include <vector>

#include <Eigen/Dense>

#include "tubecast/model.hpp"
#include "tubecast/predictor.hpp"

namespace tubecast {

/// Which process the error coordinates belong to.
enum class ErrorStage { ErrY, ErrDiffX, ErrX };

const char* to_string(ErrorStage stage);

/// Zero-mean Gaussian over the stacked prediction errors.  dim is the
/// number of error coordinates (horizon, or m * horizon in the block case).
struct ErrorJointDistribution {
    int dim = 0;
    ErrorStage stage = ErrorStage::ErrX;
    Eigen::MatrixXd covariance;
};

/// The matrices mapping stacked innovations to stacked prediction errors.
/// c1 sends (Z_{n-q+1..n+h}) to the future Y values, c2 sends
/// (Z_{p-q+1..n}) to the observed Y values, c3 applies the predictor
/// coefficients, the starred versions are zero-padded to a common
/// innovation vector, z_to_err_y = c3 * c2_star - c1_star, and
/// err_y_to_err_x is the unit-lower-triangular AR error recursion.
/// In the block case every scalar entry becomes an m x m block.
struct TransformChain {
    int m = 1;
    int q = 0;
    int n_eff = 0;
    int horizon = 0;
    Eigen::MatrixXd c1, c2, c3;
    Eigen::MatrixXd c1_star, c2_star;
    Eigen::MatrixXd z_to_err_y;
    Eigen::MatrixXd err_y_to_err_x;
};

/// Banded stencil rows (theta_q ... theta_1 1), one shifted copy per row.
Eigen::MatrixXd build_c1(const std::vector<double>& theta, int horizon);
Eigen::MatrixXd build_c2(const std::vector<double>& theta, int n_eff);
Eigen::MatrixXd build_c1(const std::vector<Eigen::MatrixXd>& Theta, int m, int horizon);
Eigen::MatrixXd build_c2(const std::vector<Eigen::MatrixXd>& Theta, int m, int n_eff);

/// Row i holds (a_{n_eff}^i ... a_1^i) so that c3 applied to the stacked
/// observed Y values (oldest first) yields the predicted future Y values.
Eigen::MatrixXd build_c3(const PredictorCoefficients& coeffs);
Eigen::MatrixXd build_c3(const BlockPredictorCoefficients& coeffs);

/// Unit-lower-triangular horizon x horizon matrix whose first column obeys
/// c_{i,1} = sum_{k=1}^{min(p,i-1)} phi_k c_{i-k,1} with c_{1,1} = 1; the
/// remaining columns are shifted copies.
Eigen::MatrixXd build_err_y_to_err_x(const std::vector<double>& phi, int horizon);
Eigen::MatrixXd build_err_y_to_err_x(const std::vector<Eigen::MatrixXd>& Phi, int m, int horizon);

/// Assembles the full chain for a window with n_eff = n - p regressors.
TransformChain build_transform_chain(const UnivariateArmaSpec& spec, int n_eff, int horizon);
TransformChain build_transform_chain(const VarmaSpec& spec, int n_eff, int horizon);

/// Sigma_ErrY = M Sigma_Z M^T with M = z_to_err_y and Sigma_Z the
/// block-diagonal innovation covariance over n_eff + q + horizon steps.
ErrorJointDistribution sigma_err_y(const TransformChain& chain, double sigma2);
ErrorJointDistribution sigma_err_y(const TransformChain& chain, const Eigen::MatrixXd& sigma_z);

/// Joint covariance of the stacked prediction errors.  Depends only on
/// (spec, n, horizon); the observed values never enter.
ErrorJointDistribution sigma_err_x(const UnivariateArmaSpec& spec, int n, int horizon);
ErrorJointDistribution sigma_err_x(const ArimaSpec& spec, int n, int horizon);
ErrorJointDistribution sigma_err_x(const VarmaSpec& spec, int n, int horizon);

/// Window-taking variants validate the window and delegate on its length.
ErrorJointDistribution sigma_err_x(const ArimaSpec& spec, const SeriesWindow& window, int horizon);
ErrorJointDistribution sigma_err_x(const VarmaSpec& spec, const SeriesWindow& window, int horizon);

} // namespace tubecast

#endif
