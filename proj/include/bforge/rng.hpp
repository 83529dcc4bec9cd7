#pragma once

#include <cmath>
#include <cstdint>

namespace bforge {

// Counter-based generator built on the splitmix64 finalizer. Draw i of
// stream s under seed x is a pure function of (x, s, i), which keeps traces
// reproducible and lets other implementations match them. The exact scheme
// is documented in the README.
namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}  // namespace detail

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(detail::mix64(seed + detail::kGolden) ^
               detail::mix64(stream * detail::kGolden + 1)) {}

    std::uint64_t next_u64() {
        return detail::mix64(key_ + (++counter_) * detail::kGolden);
    }

    // Uniform in (0, 1]; never 0 so it is safe under log().
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Box-Muller; the second variate of each pair is cached.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_unit();
        double u2 = next_unit();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Inverse standard-normal CDF: returns x with NormalCDF(x) = p.
// Acklam's rational approximation refined by one Halley step against the
// erfc-based CDF; absolute error is far below the 1e-9 the callers need.
double standard_normal_quantile(double p);

inline double standard_normal_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.70710678118654752440084436210485);
}

}  // namespace bforge
