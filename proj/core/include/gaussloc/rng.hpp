#pragma once

#include <array>
#include <cstdint>

namespace gaussloc {

// Counter-based (Philox-style) generator: every output is a pure function of
// (key, counter), so replicates and coordinate rows can be assigned disjoint
// counter blocks and the result is independent of evaluation order and of
// how work is split across threads.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(seed) {}

    std::uint64_t seed() const { return key_; }

    /// Two 64-bit words from a 128-bit counter.
    std::array<std::uint64_t, 2> raw(std::uint64_t hi, std::uint64_t lo) const;

    /// Uniform in (0,1), from word `word` (0 or 1) of counter (hi,lo).
    double uniform(std::uint64_t hi, std::uint64_t lo, int word) const;

    /// Standard normal pair via Box-Muller on counter (hi,lo).
    std::array<double, 2> normal_pair(std::uint64_t hi, std::uint64_t lo) const;

    /// n-th standard normal of stream `stream`.
    double normal(std::uint64_t stream, std::uint64_t n) const;

private:
    std::uint64_t key_;
};

/// Deterministic mixing of ids into a substream identifier.
std::uint64_t substream(std::uint64_t a, std::uint64_t b);

// Halton low-discrepancy sequence, used for quasi-random sampling plans.
class HaltonSequence {
public:
    explicit HaltonSequence(int dim);

    /// Point i (i >= 0) of the sequence, written into out[0..dim).
    void point(std::uint64_t i, double* out) const;

    int dim() const { return dim_; }

private:
    int dim_;
};

}  // namespace gaussloc
