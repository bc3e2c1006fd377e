#include "tubecast/error_covariance.hpp"

#include <sstream>

#include "tubecast/acvf.hpp"
#include "tubecast/differencing.hpp"
#include "tubecast/errors.hpp"

namespace tubecast {

namespace {

// Shifted copies of (theta_q ... theta_1 1): row r puts 1 at column q+r and
// theta_j at column q+r-j (1-based).
Eigen::MatrixXd ma_stencil(const std::vector<double>& theta, int rows) {
    const int q = static_cast<int>(theta.size());
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(rows, q + rows);
    for (int r = 0; r < rows; ++r) {
        out(r, q + r) = 1.0;
        for (int j = 1; j <= q; ++j)
            out(r, q + r - j) = theta[static_cast<std::size_t>(j - 1)];
    }
    return out;
}

Eigen::MatrixXd ma_stencil(const std::vector<Eigen::MatrixXd>& Theta, int m, int rows) {
    const int q = static_cast<int>(Theta.size());
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m * rows, m * (q + rows));
    for (int r = 0; r < rows; ++r) {
        out.block(r * m, (q + r) * m, m, m) = Eigen::MatrixXd::Identity(m, m);
        for (int j = 1; j <= q; ++j)
            out.block(r * m, (q + r - j) * m, m, m) = Theta[static_cast<std::size_t>(j - 1)];
    }
    return out;
}

void assemble_stars(TransformChain& chain) {
    const int m = chain.m;
    const int h = chain.horizon;
    const int n_eff = chain.n_eff;
    const int q = chain.q;
    const int z_len = n_eff + q + h;

    chain.c1_star = Eigen::MatrixXd::Zero(m * h, m * z_len);
    chain.c1_star.rightCols(m * (q + h)) = chain.c1;
    chain.c2_star = Eigen::MatrixXd::Zero(m * n_eff, m * z_len);
    chain.c2_star.leftCols(m * (n_eff + q)) = chain.c2;
    chain.z_to_err_y = chain.c3 * chain.c2_star - chain.c1_star;
}

ErrorJointDistribution stationary_sigma_err_x(const UnivariateArmaSpec& spec, int n, int horizon) {
    const int n_eff = n - spec.p;
    const TransformChain chain = build_transform_chain(spec, n_eff, horizon);
    ErrorJointDistribution err_y = sigma_err_y(chain, spec.sigma2);
    ErrorJointDistribution out;
    out.dim = horizon;
    out.stage = ErrorStage::ErrX;
    out.covariance = chain.err_y_to_err_x * err_y.covariance * chain.err_y_to_err_x.transpose();
    return out;
}

ErrorJointDistribution stationary_sigma_err_x(const VarmaSpec& spec, int n, int horizon) {
    const int n_eff = n - spec.p;
    const TransformChain chain = build_transform_chain(spec, n_eff, horizon);
    ErrorJointDistribution err_y = sigma_err_y(chain, spec.sigma_z);
    ErrorJointDistribution out;
    out.dim = spec.m * horizon;
    out.stage = ErrorStage::ErrX;
    out.covariance = chain.err_y_to_err_x * err_y.covariance * chain.err_y_to_err_x.transpose();
    return out;
}

} // namespace

const char* to_string(ErrorStage stage) {
    switch (stage) {
        case ErrorStage::ErrY: return "ErrY";
        case ErrorStage::ErrDiffX: return "ErrDiffX";
        case ErrorStage::ErrX: return "ErrX";
    }
    return "unknown";
}

Eigen::MatrixXd build_c1(const std::vector<double>& theta, int horizon) {
    if (horizon < 1) throw DimensionError("horizon must be at least 1");
    return ma_stencil(theta, horizon);
}

Eigen::MatrixXd build_c2(const std::vector<double>& theta, int n_eff) {
    if (n_eff < 1) throw DimensionError("n_eff must be at least 1");
    return ma_stencil(theta, n_eff);
}

Eigen::MatrixXd build_c1(const std::vector<Eigen::MatrixXd>& Theta, int m, int horizon) {
    if (horizon < 1) throw DimensionError("horizon must be at least 1");
    return ma_stencil(Theta, m, horizon);
}

Eigen::MatrixXd build_c2(const std::vector<Eigen::MatrixXd>& Theta, int m, int n_eff) {
    if (n_eff < 1) throw DimensionError("n_eff must be at least 1");
    return ma_stencil(Theta, m, n_eff);
}

Eigen::MatrixXd build_c3(const PredictorCoefficients& coeffs) {
    const int h = coeffs.horizon;
    const int n_eff = coeffs.n_eff;
    Eigen::MatrixXd out(h, n_eff);
    for (int i = 0; i < h; ++i) {
        const Eigen::VectorXd& a = coeffs.coeffs[static_cast<std::size_t>(i)];
        for (int k = 0; k < n_eff; ++k) out(i, k) = a(n_eff - 1 - k);
    }
    return out;
}

Eigen::MatrixXd build_c3(const BlockPredictorCoefficients& coeffs) {
    const int h = coeffs.horizon;
    const int n_eff = coeffs.n_eff;
    const int m = coeffs.dim;
    Eigen::MatrixXd out(m * h, m * n_eff);
    for (int i = 0; i < h; ++i) {
        const auto& a = coeffs.coeffs[static_cast<std::size_t>(i)];
        for (int k = 0; k < n_eff; ++k)
            out.block(i * m, k * m, m, m) = a[static_cast<std::size_t>(n_eff - 1 - k)];
    }
    return out;
}

Eigen::MatrixXd build_err_y_to_err_x(const std::vector<double>& phi, int horizon) {
    if (horizon < 1) throw DimensionError("horizon must be at least 1");
    const int p = static_cast<int>(phi.size());
    std::vector<double> first(static_cast<std::size_t>(horizon), 0.0);
    first[0] = 1.0;
    for (int i = 2; i <= horizon; ++i) {
        double v = 0.0;
        for (int k = 1; k <= std::min(p, i - 1); ++k)
            v += phi[static_cast<std::size_t>(k - 1)] * first[static_cast<std::size_t>(i - k - 1)];
        first[static_cast<std::size_t>(i - 1)] = v;
    }
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(horizon, horizon);
    for (int i = 0; i < horizon; ++i)
        for (int j = 0; j <= i; ++j) out(i, j) = first[static_cast<std::size_t>(i - j)];
    return out;
}

Eigen::MatrixXd build_err_y_to_err_x(const std::vector<Eigen::MatrixXd>& Phi, int m, int horizon) {
    if (horizon < 1) throw DimensionError("horizon must be at least 1");
    const int p = static_cast<int>(Phi.size());
    std::vector<Eigen::MatrixXd> first(static_cast<std::size_t>(horizon),
                                       Eigen::MatrixXd::Zero(m, m));
    first[0] = Eigen::MatrixXd::Identity(m, m);
    for (int i = 2; i <= horizon; ++i) {
        Eigen::MatrixXd v = Eigen::MatrixXd::Zero(m, m);
        for (int k = 1; k <= std::min(p, i - 1); ++k)
            v += Phi[static_cast<std::size_t>(k - 1)] * first[static_cast<std::size_t>(i - k - 1)];
        first[static_cast<std::size_t>(i - 1)] = v;
    }
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m * horizon, m * horizon);
    for (int i = 0; i < horizon; ++i)
        for (int j = 0; j <= i; ++j)
            out.block(i * m, j * m, m, m) = first[static_cast<std::size_t>(i - j)];
    return out;
}

TransformChain build_transform_chain(const UnivariateArmaSpec& spec, int n_eff, int horizon) {
    if (n_eff < 1) throw DimensionError("n_eff must be at least 1");

    TransformChain chain;
    chain.m = 1;
    chain.q = spec.q;
    chain.n_eff = n_eff;
    chain.horizon = horizon;
    chain.c1 = build_c1(spec.theta, horizon);
    chain.c2 = build_c2(spec.theta, n_eff);
    const AcvfTable table = ma_acvf(spec.theta, spec.sigma2, n_eff + horizon - 1);
    chain.c3 = build_c3(solve_blp(table, n_eff, horizon));
    chain.err_y_to_err_x = build_err_y_to_err_x(spec.phi, horizon);
    assemble_stars(chain);
    return chain;
}

TransformChain build_transform_chain(const VarmaSpec& spec, int n_eff, int horizon) {
    if (n_eff < 1) throw DimensionError("n_eff must be at least 1");

    TransformChain chain;
    chain.m = spec.m;
    chain.q = spec.q;
    chain.n_eff = n_eff;
    chain.horizon = horizon;
    chain.c1 = build_c1(spec.Theta, spec.m, horizon);
    chain.c2 = build_c2(spec.Theta, spec.m, n_eff);
    const MatrixAcvfTable table = vma_acvf(spec.Theta, spec.sigma_z, n_eff + horizon - 1);
    chain.c3 = build_c3(solve_blp(table, n_eff, horizon));
    chain.err_y_to_err_x = build_err_y_to_err_x(spec.Phi, spec.m, horizon);
    assemble_stars(chain);
    return chain;
}

ErrorJointDistribution sigma_err_y(const TransformChain& chain, double sigma2) {
    if (chain.m != 1) throw DimensionError("scalar sigma_err_y expects a univariate chain");
    ErrorJointDistribution out;
    out.dim = chain.horizon;
    out.stage = ErrorStage::ErrY;
    out.covariance = sigma2 * (chain.z_to_err_y * chain.z_to_err_y.transpose());
    return out;
}

ErrorJointDistribution sigma_err_y(const TransformChain& chain, const Eigen::MatrixXd& sigma_z) {
    const int m = chain.m;
    if (sigma_z.rows() != m || sigma_z.cols() != m) {
        std::ostringstream os;
        os << "sigmaZ has size " << sigma_z.rows() << "x" << sigma_z.cols()
           << ", chain expects " << m << "x" << m;
        throw DimensionError(os.str());
    }
    const int z_len = chain.n_eff + chain.q + chain.horizon;
    Eigen::MatrixXd big_sigma = Eigen::MatrixXd::Zero(m * z_len, m * z_len);
    for (int t = 0; t < z_len; ++t) big_sigma.block(t * m, t * m, m, m) = sigma_z;

    ErrorJointDistribution out;
    out.dim = m * chain.horizon;
    out.stage = ErrorStage::ErrY;
    out.covariance = chain.z_to_err_y * big_sigma * chain.z_to_err_y.transpose();
    return out;
}

ErrorJointDistribution sigma_err_x(const UnivariateArmaSpec& spec, int n, int horizon) {
    if (horizon < 1) throw DimensionError("horizon must be at least 1");
    if (n < spec.p + spec.q + 1) {
        std::ostringstream os;
        os << "window length " << n << " below minimum " << spec.p + spec.q + 1;
        throw DimensionError(os.str());
    }
    return stationary_sigma_err_x(spec, n, horizon);
}

ErrorJointDistribution sigma_err_x(const ArimaSpec& spec, int n, int horizon) {
    if (spec.d == 0) return sigma_err_x(spec.arma, n, horizon);
    ErrorJointDistribution inner = sigma_err_x(spec.arma, n - spec.d, horizon);
    inner.stage = ErrorStage::ErrDiffX;
    return lift_sigma(inner, build_t_matrix(spec.d, horizon));
}

ErrorJointDistribution sigma_err_x(const VarmaSpec& spec, int n, int horizon) {
    if (horizon < 1) throw DimensionError("horizon must be at least 1");
    if (n < spec.p + spec.q + spec.d + 1) {
        std::ostringstream os;
        os << "window length " << n << " below minimum " << spec.p + spec.q + spec.d + 1;
        throw DimensionError(os.str());
    }
    ErrorJointDistribution inner = stationary_sigma_err_x(spec, n - spec.d, horizon);
    if (spec.d == 0) return inner;
    inner.stage = ErrorStage::ErrDiffX;
    return lift_sigma(inner, build_t_matrix(spec.d, horizon), spec.m);
}

ErrorJointDistribution sigma_err_x(const ArimaSpec& spec, const SeriesWindow& window, int horizon) {
    check_window(window, spec);
    return sigma_err_x(spec, window.length(), horizon);
}

ErrorJointDistribution sigma_err_x(const VarmaSpec& spec, const SeriesWindow& window, int horizon) {
    check_window(window, spec);
    return sigma_err_x(spec, window.length(), horizon);
}

} // namespace tubecast
