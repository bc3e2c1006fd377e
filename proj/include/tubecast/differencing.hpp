#ifndef TUBECAST_DIFFERENCING_HPP
#define TUBECAST_DIFFERENCING_HPP

#include <Eigen/Dense>

#include "tubecast/error_covariance.hpp"
#include "tubecast/model.hpp"

namespace tubecast {

/// Unit-lower-triangular lift from differenced-process errors to
/// original-process errors.  The first column follows
/// T_{i,1} = sum_{k=1}^{min(i-1,d)} C(d,k) (-1)^{k+1} T_{i-k,1} with
/// T_{1,1} = 1; columns j >= 2 are shifted copies.  d = 1 gives the
/// all-ones lower triangle, d = 0 the identity.
struct DifferenceLift {
    int d = 0;
    int horizon = 0;
    Eigen::MatrixXd T;

    /// Kronecker expansion T (x) I_m for the block pipeline.
    Eigen::MatrixXd block(int m) const;
};

/// Applies d iterated first differences; output length = input length - d.
SeriesWindow difference(const SeriesWindow& series, int d);

/// Inverse of difference: rebuilds the original series from the differenced
/// one plus the d retained leading values (`head`, one row per value).
SeriesWindow undifference(const SeriesWindow& diffed, const Eigen::MatrixXd& head);

DifferenceLift build_t_matrix(int d, int horizon);

/// Sigma_ErrX = T Sigma_inner T^T (univariate) or (T (x) I_m) sandwich.
ErrorJointDistribution lift_sigma(const ErrorJointDistribution& inner,
                                  const DifferenceLift& lift);
ErrorJointDistribution lift_sigma(const ErrorJointDistribution& inner,
                                  const DifferenceLift& lift, int m);

} // namespace tubecast

#endif
