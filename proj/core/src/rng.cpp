#include "gaussloc/rng.hpp"

#include <cmath>

namespace gaussloc {
namespace {

constexpr std::uint64_t kPhiloxM = 0xD2B74407B1CE6E93ULL;
constexpr std::uint64_t kPhiloxW = 0x9E3779B97F4A7C15ULL;

inline void philox_round(std::uint64_t& c0, std::uint64_t& c1, std::uint64_t k) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(kPhiloxM) * c0;
    const std::uint64_t lo = static_cast<std::uint64_t>(prod);
    const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
    c0 = hi ^ k ^ c1;
    c1 = lo;
}

inline std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline double to_unit(std::uint64_t x) {
    // (0,1]: 53 mantissa bits, never exactly 0 so log() is safe.
    return (static_cast<double>(x >> 11) + 1.0) * 0x1p-53;
}

}  // namespace

std::array<std::uint64_t, 2> CounterRng::raw(std::uint64_t hi, std::uint64_t lo) const {
    std::uint64_t c0 = lo;
    std::uint64_t c1 = hi;
    std::uint64_t k = key_;
    for (int r = 0; r < 10; ++r) {
        philox_round(c0, c1, k);
        k += kPhiloxW;
    }
    return {c0, c1};
}

double CounterRng::uniform(std::uint64_t hi, std::uint64_t lo, int word) const {
    return to_unit(raw(hi, lo)[word & 1]);
}

std::array<double, 2> CounterRng::normal_pair(std::uint64_t hi, std::uint64_t lo) const {
    const auto words = raw(hi, lo);
    const double u1 = to_unit(words[0]);
    const double u2 = to_unit(words[1]);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

double CounterRng::normal(std::uint64_t stream, std::uint64_t n) const {
    const auto pair = normal_pair(stream, n >> 1);
    return pair[n & 1];
}

std::uint64_t substream(std::uint64_t a, std::uint64_t b) {
    return splitmix(splitmix(a) ^ b);
}

namespace {
constexpr int kHaltonPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
}

HaltonSequence::HaltonSequence(int dim) : dim_(dim) {}

void HaltonSequence::point(std::uint64_t i, double* out) const {
    for (int d = 0; d < dim_; ++d) {
        const std::uint64_t base = kHaltonPrimes[d % 24];
        double f = 1.0;
        double x = 0.0;
        std::uint64_t n = i + 1;  // skip the origin
        while (n > 0) {
            f /= static_cast<double>(base);
            x += f * static_cast<double>(n % base);
            n /= base;
        }
        out[d] = x;
    }
}

}  // namespace gaussloc
