#ifndef TUBECAST_ERRORS_HPP
#define TUBECAST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tubecast {

/// Malformed or structurally invalid input (config files, option values).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Shapes of otherwise valid objects do not agree (series width vs model
/// dimension, tube length vs horizon, ...).
class DimensionError : public std::runtime_error {
public:
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical routine failed beyond its tolerance (non-finite solve result,
/// covariance not PSD past the jitter budget).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace tubecast

#endif
