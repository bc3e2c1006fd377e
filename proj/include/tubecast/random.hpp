#ifndef TUBECAST_RANDOM_HPP
#define TUBECAST_RANDOM_HPP

#include <cstdint>
#include <random>

namespace tubecast {

/// splitmix64 step; used to derive independent per-path / per-partition
/// seeds from (seed, index) so results never depend on execution order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// Standard normal stream with a fully pinned definition: mt19937_64
/// uniforms mapped to (0,1) and fed through the trigonometric Box-Muller
/// transform.  std::normal_distribution is deliberately avoided because its
/// algorithm differs across standard libraries; this stream is reproducible
/// everywhere for a given seed.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {
        // (x >> 11) yields 53 random bits; the offset keeps the value in (0,1).
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * kPi * u2;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return r * std::cos(angle);
    }

private:
    static constexpr double kPi = 3.141592653589793238462643383279502884;
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace tubecast

#endif
