#include "stit/qmc.hpp"

#include <cmath>
#include <stdexcept>

namespace stit {

namespace {
constexpr int kBases[HaltonSequence::kMaxDims] = {2, 3, 5, 7, 11, 13, 17, 19};
}

double halton(uint64_t index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * (index % base);
        index /= base;
    }
    return r;
}

HaltonSequence::HaltonSequence(int dims, std::vector<double> shift)
    : dims_(dims), shift_(std::move(shift)) {
    if (dims < 1 || dims > kMaxDims) throw std::runtime_error("bad qmc dims");
    if (static_cast<int>(shift_.size()) != dims)
        throw std::runtime_error("shift size mismatch");
}

HaltonSequence::HaltonSequence(int dims)
    : HaltonSequence(dims, std::vector<double>(dims, 0.0)) {}

void HaltonSequence::point(uint64_t index, double* out) const {
    for (int d = 0; d < dims_; ++d) {
        double v = halton(index + 1, kBases[d]) + shift_[d];
        out[d] = v - std::floor(v);
    }
}

std::vector<double> HaltonSequence::random_shift(int dims, RngStream& rng) {
    std::vector<double> s(dims);
    for (double& v : s) v = rng.uniform();
    return s;
}

}  // namespace stit
