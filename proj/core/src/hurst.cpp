#include "gaussloc/hurst.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaussloc {

HurstVector::HurstVector(std::vector<double> h) : h_(std::move(h)) {
    if (h_.empty()) throw std::invalid_argument("HurstVector: empty");
    for (double v : h_) {
        if (!(v > 0.0 && v < 1.0))
            throw std::domain_error("HurstVector: entries must lie in (0,1)");
    }
}

HurstVector::HurstVector(std::initializer_list<double> h)
    : HurstVector(std::vector<double>(h)) {}

double HurstVector::q_sum() const {
    double q = 0.0;
    for (double v : h_) q += 1.0 / v;
    return q;
}

HurstVector HurstVector::min_with(const HurstVector& other) const {
    if (other.dim() != dim())
        throw std::invalid_argument("HurstVector::min_with: dimension mismatch");
    std::vector<double> out(h_.size());
    for (std::size_t j = 0; j < h_.size(); ++j) out[j] = std::min(h_[j], other.h_[j]);
    return HurstVector(out);
}

HurstVector HurstVector::concat(const HurstVector& other) const {
    std::vector<double> out = h_;
    out.insert(out.end(), other.h_.begin(), other.h_.end());
    return HurstVector(out);
}

}  // namespace gaussloc
