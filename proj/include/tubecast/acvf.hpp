#ifndef TUBECAST_ACVF_HPP
#define TUBECAST_ACVF_HPP

#include <vector>

#include <Eigen/Dense>

namespace tubecast {

/// Autocovariances gamma(0..max_lag) of a scalar MA(q) process.
/// gamma(h) is exactly zero for h > q, so the table is never truncated.
struct AcvfTable {
    int max_lag = 0;
    std::vector<double> gamma; ///< gamma[h], h = 0..max_lag

    double at(int lag) const { return gamma.at(static_cast<std::size_t>(lag)); }
};

/// Matrix autocovariances Gamma(h) = E[Y_{t+h} Y_t^T] of a vector MA(q)
/// process, stored for h = 0..max_lag; Gamma(-h) = Gamma(h)^T by
/// stationarity, so at() accepts negative lags.
struct MatrixAcvfTable {
    int dim = 1;
    int max_lag = 0;
    std::vector<Eigen::MatrixXd> values; ///< Gamma(h), h = 0..max_lag

    Eigen::MatrixXd at(int lag) const {
        if (lag >= 0) return values.at(static_cast<std::size_t>(lag));
        return values.at(static_cast<std::size_t>(-lag)).transpose();
    }
};

/// gamma(h) = sigma2 * sum_{j=0}^{q-h} theta_j theta_{j+h} with theta_0 = 1.
AcvfTable ma_acvf(const std::vector<double>& theta, double sigma2, int max_lag);

/// Gamma(h) = sum_{j=0}^{q-h} Theta_{j+h} SigmaZ Theta_j^T with Theta_0 = I.
MatrixAcvfTable vma_acvf(const std::vector<Eigen::MatrixXd>& Theta,
                         const Eigen::MatrixXd& sigma_z, int max_lag);

} // namespace tubecast

#endif
