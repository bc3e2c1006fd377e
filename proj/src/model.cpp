#include "tubecast/model.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace tubecast {

namespace {

bool all_finite(const Eigen::MatrixXd& m) { return m.allFinite(); }

std::string shape_of(const Eigen::MatrixXd& m) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols();
    return os.str();
}

// Spectral radius of the companion matrix built from row coefficients
// c_1..c_k: top row (c_1 ... c_k), subdiagonal identity.
double companion_spectral_radius(const std::vector<double>& c) {
    const int k = static_cast<int>(c.size());
    if (k == 0) return 0.0;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(k, k);
    for (int j = 0; j < k; ++j) comp(0, j) = c[j];
    for (int i = 1; i < k; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double companion_spectral_radius(const std::vector<Eigen::MatrixXd>& C, int m) {
    const int k = static_cast<int>(C.size());
    if (k == 0) return 0.0;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(k * m, k * m);
    for (int j = 0; j < k; ++j) comp.block(0, j * m, m, m) = C[j];
    for (int i = 1; i < k; ++i)
        comp.block(i * m, (i - 1) * m, m, m) = Eigen::MatrixXd::Identity(m, m);
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

void check_stationarity(const std::vector<double>& phi,
                        const std::vector<double>& theta,
                        ValidationReport& report) {
    if (!phi.empty()) {
        const double rho = ar_companion_spectral_radius(phi);
        if (rho >= 1.0) {
            std::ostringstream os;
            os << "AR polynomial has a root on or inside the unit circle "
               << "(companion spectral radius " << rho << "); process is not causal";
            report.add_warning(os.str());
        }
    }
    if (!theta.empty()) {
        const double rho = ma_companion_spectral_radius(theta);
        if (rho >= 1.0) {
            std::ostringstream os;
            os << "MA polynomial has a root on or inside the unit circle "
               << "(companion spectral radius " << rho << "); process is not invertible";
            report.add_warning(os.str());
        }
    }
}

} // namespace

bool ValidationReport::ok() const {
    for (const auto& issue : issues)
        if (issue.severity == Severity::Error) return false;
    return true;
}

bool ValidationReport::has_warnings() const {
    for (const auto& issue : issues)
        if (issue.severity == Severity::Warning) return true;
    return false;
}

void ValidationReport::add_error(std::string msg) {
    issues.push_back({Severity::Error, std::move(msg)});
}

void ValidationReport::add_warning(std::string msg) {
    issues.push_back({Severity::Warning, std::move(msg)});
}

ValidationReport validate_spec(const UnivariateArmaSpec& spec) {
    ValidationReport report;
    if (spec.p < 0) report.add_error("p must be nonnegative");
    if (spec.q < 0) report.add_error("q must be nonnegative");
    if (static_cast<int>(spec.phi.size()) != std::max(spec.p, 0)) {
        std::ostringstream os;
        os << "phi has " << spec.phi.size() << " coefficients, expected p = " << spec.p;
        report.add_error(os.str());
    }
    if (static_cast<int>(spec.theta.size()) != std::max(spec.q, 0)) {
        std::ostringstream os;
        os << "theta has " << spec.theta.size() << " coefficients, expected q = " << spec.q;
        report.add_error(os.str());
    }
    if (!(spec.sigma2 > 0.0)) report.add_error("sigma2 must be > 0");
    if (!std::isfinite(spec.mean)) report.add_error("mean must be finite");
    for (double v : spec.phi)
        if (!std::isfinite(v)) report.add_error("phi contains a non-finite value");
    for (double v : spec.theta)
        if (!std::isfinite(v)) report.add_error("theta contains a non-finite value");

    if (report.ok()) check_stationarity(spec.phi, spec.theta, report);
    return report;
}

ValidationReport validate_spec(const ArimaSpec& spec) {
    ValidationReport report = validate_spec(spec.arma);
    if (spec.d < 0) report.add_error("d must be nonnegative");
    return report;
}

ValidationReport validate_spec(const VarmaSpec& spec) {
    ValidationReport report;
    if (spec.m < 1) report.add_error("m must be positive");
    if (spec.p < 0) report.add_error("p must be nonnegative");
    if (spec.q < 0) report.add_error("q must be nonnegative");
    if (spec.d < 0) report.add_error("d must be nonnegative");
    if (static_cast<int>(spec.Phi.size()) != std::max(spec.p, 0)) {
        std::ostringstream os;
        os << "Phi has " << spec.Phi.size() << " matrices, expected p = " << spec.p;
        report.add_error(os.str());
    }
    if (static_cast<int>(spec.Theta.size()) != std::max(spec.q, 0)) {
        std::ostringstream os;
        os << "Theta has " << spec.Theta.size() << " matrices, expected q = " << spec.q;
        report.add_error(os.str());
    }
    if (spec.m >= 1) {
        for (std::size_t i = 0; i < spec.Phi.size(); ++i) {
            if (spec.Phi[i].rows() != spec.m || spec.Phi[i].cols() != spec.m) {
                std::ostringstream os;
                os << "Phi[" << (i + 1) << "] has size " << shape_of(spec.Phi[i])
                   << ", expected " << spec.m << "x" << spec.m;
                report.add_error(os.str());
            } else if (!all_finite(spec.Phi[i])) {
                std::ostringstream os;
                os << "Phi[" << (i + 1) << "] contains a non-finite value";
                report.add_error(os.str());
            }
        }
        for (std::size_t i = 0; i < spec.Theta.size(); ++i) {
            if (spec.Theta[i].rows() != spec.m || spec.Theta[i].cols() != spec.m) {
                std::ostringstream os;
                os << "Theta[" << (i + 1) << "] has size " << shape_of(spec.Theta[i])
                   << ", expected " << spec.m << "x" << spec.m;
                report.add_error(os.str());
            } else if (!all_finite(spec.Theta[i])) {
                std::ostringstream os;
                os << "Theta[" << (i + 1) << "] contains a non-finite value";
                report.add_error(os.str());
            }
        }
        if (spec.sigma_z.rows() != spec.m || spec.sigma_z.cols() != spec.m) {
            std::ostringstream os;
            os << "sigmaZ has size " << shape_of(spec.sigma_z) << ", expected "
               << spec.m << "x" << spec.m;
            report.add_error(os.str());
        } else if (!all_finite(spec.sigma_z)) {
            report.add_error("sigmaZ contains a non-finite value");
        } else {
            const double asym = (spec.sigma_z - spec.sigma_z.transpose()).cwiseAbs().maxCoeff();
            const double scale = std::max(1.0, spec.sigma_z.cwiseAbs().maxCoeff());
            if (asym > 1e-10 * scale) {
                report.add_error("sigmaZ is not symmetric");
            } else {
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(spec.sigma_z);
                if (es.eigenvalues().minCoeff() <= 0.0) {
                    std::ostringstream os;
                    os << "sigmaZ is not positive definite (min eigenvalue "
                       << es.eigenvalues().minCoeff() << ")";
                    report.add_error(os.str());
                }
            }
        }
        if (spec.mean.size() != 0 && spec.mean.size() != spec.m) {
            std::ostringstream os;
            os << "mean has length " << spec.mean.size() << ", expected " << spec.m;
            report.add_error(os.str());
        }
        if (!spec.mean.allFinite()) report.add_error("mean contains a non-finite value");
    }

    if (report.ok()) {
        if (!spec.Phi.empty()) {
            const double rho = ar_companion_spectral_radius(spec.Phi, spec.m);
            if (rho >= 1.0) {
                std::ostringstream os;
                os << "AR block polynomial has a root on or inside the unit circle "
                   << "(companion spectral radius " << rho << "); process is not causal";
                report.add_warning(os.str());
            }
        }
        if (!spec.Theta.empty()) {
            const double rho = ma_companion_spectral_radius(spec.Theta, spec.m);
            if (rho >= 1.0) {
                std::ostringstream os;
                os << "MA block polynomial has a root on or inside the unit circle "
                   << "(companion spectral radius " << rho << "); process is not invertible";
                report.add_warning(os.str());
            }
        }
    }
    return report;
}

void check_window(const SeriesWindow& window, const ArimaSpec& spec) {
    if (window.width() != 1) {
        std::ostringstream os;
        os << "series has " << window.width() << " columns, expected 1";
        throw DimensionError(os.str());
    }
    const int min_len = spec.arma.p + spec.arma.q + spec.d + 1;
    if (window.length() < min_len) {
        std::ostringstream os;
        os << "series has " << window.length() << " rows, need at least "
           << min_len << " for p=" << spec.arma.p << ", q=" << spec.arma.q
           << ", d=" << spec.d;
        throw DimensionError(os.str());
    }
    if (!window.values.allFinite())
        throw DimensionError("series contains a non-finite value");
}

void check_window(const SeriesWindow& window, const VarmaSpec& spec) {
    if (window.width() != spec.m) {
        std::ostringstream os;
        os << "series has " << window.width() << " columns, expected m = " << spec.m;
        throw DimensionError(os.str());
    }
    const int min_len = spec.p + spec.q + spec.d + 1;
    if (window.length() < min_len) {
        std::ostringstream os;
        os << "series has " << window.length() << " rows, need at least "
           << min_len << " for p=" << spec.p << ", q=" << spec.q << ", d=" << spec.d;
        throw DimensionError(os.str());
    }
    if (!window.values.allFinite())
        throw DimensionError("series contains a non-finite value");
}

double ar_companion_spectral_radius(const std::vector<double>& phi) {
    return companion_spectral_radius(phi);
}

double ar_companion_spectral_radius(const std::vector<Eigen::MatrixXd>& Phi, int m) {
    return companion_spectral_radius(Phi, m);
}

double ma_companion_spectral_radius(const std::vector<double>& theta) {
    std::vector<double> negated(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) negated[i] = -theta[i];
    return companion_spectral_radius(negated);
}

double ma_companion_spectral_radius(const std::vector<Eigen::MatrixXd>& Theta, int m) {
    std::vector<Eigen::MatrixXd> negated(Theta.size());
    for (std::size_t i = 0; i < Theta.size(); ++i) negated[i] = -Theta[i];
    return companion_spectral_radius(negated, m);
}

} // namespace tubecast
