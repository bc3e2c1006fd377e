#include "tubecast/differencing.hpp"

#include <sstream>

#include "tubecast/errors.hpp"

namespace tubecast {

Eigen::MatrixXd DifferenceLift::block(int m) const {
    const int h = horizon;
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m * h, m * h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j <= i; ++j)
            out.block(i * m, j * m, m, m) =
                T(i, j) * Eigen::MatrixXd::Identity(m, m);
    return out;
}

SeriesWindow difference(const SeriesWindow& series, int d) {
    if (d < 0) throw DimensionError("d must be nonnegative");
    if (series.length() <= d) {
        std::ostringstream os;
        os << "series of length " << series.length() << " cannot be differenced " << d << " times";
        throw DimensionError(os.str());
    }
    Eigen::MatrixXd cur = series.values;
    for (int level = 0; level < d; ++level) {
        Eigen::MatrixXd next(cur.rows() - 1, cur.cols());
        for (Eigen::Index t = 1; t < cur.rows(); ++t)
            next.row(t - 1) = cur.row(t) - cur.row(t - 1);
        cur = std::move(next);
    }
    return SeriesWindow(std::move(cur));
}

SeriesWindow undifference(const SeriesWindow& diffed, const Eigen::MatrixXd& head) {
    const int d = static_cast<int>(head.rows());
    if (d == 0) return diffed;
    if (head.cols() != diffed.values.cols())
        throw DimensionError("head width does not match the differenced series");

    // First value of the level-j differenced series, derivable from head.
    std::vector<Eigen::RowVectorXd> level_start(static_cast<std::size_t>(d));
    Eigen::MatrixXd cur_head = head;
    for (int j = 0; j < d; ++j) {
        level_start[static_cast<std::size_t>(j)] = cur_head.row(0);
        if (j + 1 < d) {
            Eigen::MatrixXd next(cur_head.rows() - 1, cur_head.cols());
            for (Eigen::Index t = 1; t < cur_head.rows(); ++t)
                next.row(t - 1) = cur_head.row(t) - cur_head.row(t - 1);
            cur_head = std::move(next);
        }
    }

    Eigen::MatrixXd cur = diffed.values;
    for (int j = d - 1; j >= 0; --j) {
        Eigen::MatrixXd next(cur.rows() + 1, cur.cols());
        next.row(0) = level_start[static_cast<std::size_t>(j)];
        for (Eigen::Index t = 0; t < cur.rows(); ++t)
            next.row(t + 1) = next.row(t) + cur.row(t);
        cur = std::move(next);
    }
    return SeriesWindow(std::move(cur));
}

DifferenceLift build_t_matrix(int d, int horizon) {
    if (d < 0) throw DimensionError("d must be nonnegative");
    if (horizon < 1) throw DimensionError("horizon must be at least 1");

    // C(d,k) * (-1)^{k+1} for k = 1..d
    std::vector<double> w(static_cast<std::size_t>(d) + 1, 0.0);
    double binom = 1.0;
    for (int k = 1; k <= d; ++k) {
        binom = binom * (d - k + 1) / k;
        w[static_cast<std::size_t>(k)] = (k % 2 == 1) ? binom : -binom;
    }

    std::vector<double> first(static_cast<std::size_t>(horizon), 0.0);
    first[0] = 1.0;
    for (int i = 2; i <= horizon; ++i) {
        double v = 0.0;
        for (int k = 1; k <= std::min(i - 1, d); ++k)
            v += w[static_cast<std::size_t>(k)] * first[static_cast<std::size_t>(i - k - 1)];
        first[static_cast<std::size_t>(i - 1)] = v;
    }

    DifferenceLift lift;
    lift.d = d;
    lift.horizon = horizon;
    lift.T = Eigen::MatrixXd::Zero(horizon, horizon);
    for (int i = 0; i < horizon; ++i)
        for (int j = 0; j <= i; ++j) lift.T(i, j) = first[static_cast<std::size_t>(i - j)];
    return lift;
}

ErrorJointDistribution lift_sigma(const ErrorJointDistribution& inner,
                                  const DifferenceLift& lift) {
    if (inner.dim != lift.horizon) {
        std::ostringstream os;
        os << "inner distribution has dim " << inner.dim << ", lift expects " << lift.horizon;
        throw DimensionError(os.str());
    }
    ErrorJointDistribution out;
    out.dim = inner.dim;
    out.stage = ErrorStage::ErrX;
    out.covariance = lift.T * inner.covariance * lift.T.transpose();
    return out;
}

ErrorJointDistribution lift_sigma(const ErrorJointDistribution& inner,
                                  const DifferenceLift& lift, int m) {
    if (inner.dim != m * lift.horizon) {
        std::ostringstream os;
        os << "inner distribution has dim " << inner.dim << ", block lift expects "
           << m * lift.horizon;
        throw DimensionError(os.str());
    }
    const Eigen::MatrixXd B = lift.block(m);
    ErrorJointDistribution out;
    out.dim = inner.dim;
    out.stage = ErrorStage::ErrX;
    out.covariance = B * inner.covariance * B.transpose();
    return out;
}

} // namespace tubecast
