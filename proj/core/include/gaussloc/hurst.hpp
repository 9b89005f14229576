#pragma once

#include <initializer_list>
#include <vector>

namespace gaussloc {

/// Anisotropy index vector, one entry per parameter dimension, each in (0,1).
class HurstVector {
public:
    explicit HurstVector(std::vector<double> h);
    HurstVector(std::initializer_list<double> h);

    int dim() const { return static_cast<int>(h_.size()); }
    double operator[](int j) const { return h_[j]; }
    const std::vector<double>& entries() const { return h_; }

    /// Sum of reciprocal entries; the quantity every threshold compares to.
    double q_sum() const;

    /// Entrywise minimum with another vector of the same length.
    HurstVector min_with(const HurstVector& other) const;

    /// Concatenation (used by the product-parameter constructions).
    HurstVector concat(const HurstVector& other) const;

private:
    std::vector<double> h_;
};

}  // namespace gaussloc
