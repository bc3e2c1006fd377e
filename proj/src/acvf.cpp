#include "tubecast/acvf.hpp"

#include <sstream>
#include <stdexcept>

#include "tubecast/errors.hpp"

namespace tubecast {

AcvfTable ma_acvf(const std::vector<double>& theta, double sigma2, int max_lag) {
    if (max_lag < 0) throw std::invalid_argument("max_lag must be nonnegative");
    const int q = static_cast<int>(theta.size());

    AcvfTable table;
    table.max_lag = max_lag;
    table.gamma.assign(static_cast<std::size_t>(max_lag) + 1, 0.0);

    // theta_0 = 1 by convention.
    auto coeff = [&](int j) { return j == 0 ? 1.0 : theta[static_cast<std::size_t>(j - 1)]; };
    for (int h = 0; h <= std::min(max_lag, q); ++h) {
        double acc = 0.0;
        for (int j = 0; j + h <= q; ++j) acc += coeff(j) * coeff(j + h);
        table.gamma[static_cast<std::size_t>(h)] = sigma2 * acc;
    }
    return table;
}

MatrixAcvfTable vma_acvf(const std::vector<Eigen::MatrixXd>& Theta,
                         const Eigen::MatrixXd& sigma_z, int max_lag) {
    if (max_lag < 0) throw std::invalid_argument("max_lag must be nonnegative");
    const int m = static_cast<int>(sigma_z.rows());
    if (sigma_z.cols() != m)
        throw DimensionError("sigmaZ must be square");
    const int q = static_cast<int>(Theta.size());
    for (int j = 0; j < q; ++j) {
        if (Theta[static_cast<std::size_t>(j)].rows() != m ||
            Theta[static_cast<std::size_t>(j)].cols() != m) {
            std::ostringstream os;
            os << "Theta[" << (j + 1) << "] does not match sigmaZ dimension " << m;
            throw DimensionError(os.str());
        }
    }

    MatrixAcvfTable table;
    table.dim = m;
    table.max_lag = max_lag;
    table.values.assign(static_cast<std::size_t>(max_lag) + 1, Eigen::MatrixXd::Zero(m, m));

    auto coeff = [&](int j) -> Eigen::MatrixXd {
        return j == 0 ? Eigen::MatrixXd::Identity(m, m)
                      : Theta[static_cast<std::size_t>(j - 1)];
    };
    for (int h = 0; h <= std::min(max_lag, q); ++h) {
        Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(m, m);
        for (int j = 0; j + h <= q; ++j)
            acc += coeff(j + h) * sigma_z * coeff(j).transpose();
        table.values[static_cast<std::size_t>(h)] = acc;
    }
    return table;
}

} // namespace tubecast
