#include "tubecast/gaussian_prob.hpp"

#include <cmath>
#include <sstream>

#include "tubecast/errors.hpp"
#include "tubecast/random.hpp"

namespace tubecast {

namespace {

constexpr double kJitterRatio = 1e-10;

BoxProbability make_estimate(long long hits, const McConfig& config) {
    BoxProbability out;
    out.samples = config.samples;
    out.seed = config.seed;
    out.estimate = static_cast<double>(hits) / static_cast<double>(config.samples);
    out.standard_error = std::sqrt(out.estimate * (1.0 - out.estimate) /
                                   static_cast<double>(config.samples));
    return out;
}

} // namespace

ErrorBox tube_to_error_box(const ForecastTube& tube, const ForecastVector& forecast) {
    if (tube.horizon() != forecast.horizon() || tube.width() != forecast.width()) {
        std::ostringstream os;
        os << "tube is " << tube.horizon() << "x" << tube.width() << ", forecast is "
           << forecast.horizon() << "x" << forecast.width();
        throw DimensionError(os.str());
    }
    ErrorBox box;
    box.steps = tube.horizon();
    box.coords_per_step = tube.width();
    box.bounds.reserve(static_cast<std::size_t>(box.steps * box.coords_per_step));
    for (int i = 0; i < box.steps; ++i) {
        for (int s = 0; s < box.coords_per_step; ++s) {
            const Interval& iv = tube.steps[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
            if (iv.lo > iv.hi) {
                std::ostringstream os;
                os << "tube interval at step " << (i + 1) << ", coordinate " << (s + 1)
                   << " has lower bound above upper bound";
                throw DimensionError(os.str());
            }
            const double p = forecast.values(i, s);
            box.bounds.push_back({p - iv.hi, p - iv.lo});
        }
    }
    return box;
}

Eigen::MatrixXd psd_cholesky_factor(const Eigen::MatrixXd& sigma) {
    const int n = static_cast<int>(sigma.rows());
    if (sigma.cols() != n) throw DimensionError("covariance must be square");

    Eigen::MatrixXd a = sigma;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;

    const double tol = kJitterRatio * std::max(1.0, a.diagonal().maxCoeff());
    int rank = 0;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int j = k + 1; j < n; ++j)
            if (a(j, j) > a(pivot, pivot)) pivot = j;
        const double d = a(pivot, pivot);
        if (d <= tol) {
            for (int j = k; j < n; ++j) {
                if (a(j, j) < -tol) {
                    std::ostringstream os;
                    os << "covariance is not PSD: pivot " << a(j, j)
                       << " below the jitter tolerance " << -tol;
                    throw NumericError(os.str());
                }
            }
            break;
        }
        if (pivot != k) {
            a.row(k).swap(a.row(pivot));
            a.col(k).swap(a.col(pivot));
            std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(pivot)]);
        }
        const double root = std::sqrt(d);
        a(k, k) = root;
        for (int i = k + 1; i < n; ++i) a(i, k) /= root;
        for (int j = k + 1; j < n; ++j)
            for (int i = j; i < n; ++i) a(i, j) -= a(i, k) * a(j, k);
        rank = k + 1;
    }

    Eigen::MatrixXd factor = Eigen::MatrixXd::Zero(n, std::max(rank, 0));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < rank && c <= i; ++c)
            factor(perm[static_cast<std::size_t>(i)], c) = a(i, c);
    return factor;
}

TubeProbabilities evaluate_tube(const ErrorJointDistribution& dist, const ErrorBox& box,
                                const McConfig& config) {
    if (box.dim() != dist.dim) {
        std::ostringstream os;
        os << "box has " << box.dim() << " coordinates, distribution has " << dist.dim;
        throw DimensionError(os.str());
    }
    if (config.samples < 1) throw ConfigError("samples must be at least 1");
    const int steps = box.steps;
    const int m = box.coords_per_step;
    const int dim = dist.dim;

    const Eigen::MatrixXd factor = psd_cholesky_factor(dist.covariance);
    const int rank = static_cast<int>(factor.cols());

    NormalStream stream(config.seed);
    Eigen::VectorXd u(rank);
    Eigen::VectorXd x(dim);
    long long inter_hits = 0;
    long long union_hits = 0;
    std::vector<long long> step_hits(static_cast<std::size_t>(steps), 0);

    for (long long s = 0; s < config.samples; ++s) {
        for (int r = 0; r < rank; ++r) u(r) = stream.next();
        x.noalias() = factor * u;

        bool all_steps = true;
        bool any_step = false;
        for (int i = 0; i < steps; ++i) {
            bool inside = true;
            for (int c = 0; c < m; ++c) {
                const int idx = i * m + c;
                const Interval& iv = box.bounds[static_cast<std::size_t>(idx)];
                if (x(idx) < iv.lo || x(idx) > iv.hi) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                ++step_hits[static_cast<std::size_t>(i)];
                any_step = true;
            } else {
                all_steps = false;
            }
        }
        if (all_steps) ++inter_hits;
        if (any_step) ++union_hits;
    }

    TubeProbabilities out;
    out.intersection = make_estimate(inter_hits, config);
    out.union_any = make_estimate(union_hits, config);
    out.marginals.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        out.marginals.push_back(make_estimate(step_hits[static_cast<std::size_t>(i)], config));
    return out;
}

BoxProbability box_probability(const ErrorJointDistribution& dist, const ErrorBox& box,
                               const McConfig& config) {
    return evaluate_tube(dist, box, config).intersection;
}

BoxProbability union_probability(const ErrorJointDistribution& dist, const ErrorBox& box,
                                 const McConfig& config) {
    return evaluate_tube(dist, box, config).union_any;
}

double gaussian_interval_probability(double variance, const Interval& interval) {
    if (variance < 0.0) throw NumericError("variance must be nonnegative");
    if (variance == 0.0)
        return (interval.lo <= 0.0 && 0.0 <= interval.hi) ? 1.0 : 0.0;
    const double sd = std::sqrt(variance);
    const double inv = 1.0 / (sd * std::sqrt(2.0));
    auto cdf = [&](double v) {
        if (std::isinf(v)) return v > 0 ? 1.0 : 0.0;
        return 0.5 * (1.0 + std::erf(v * inv));
    };
    return cdf(interval.hi) - cdf(interval.lo);
}

} // namespace tubecast
