#ifndef STIT_QMC_HPP
#define STIT_QMC_HPP

#include <cstdint>
#include <vector>

#include "stit/rng.hpp"

namespace stit {

// radical-inverse of index in the given base
double halton(uint64_t index, int base);

// Halton sequence with a Cranley-Patterson random shift per dimension;
// identical (dims, shift) always produces the same points
class HaltonSequence {
  public:
    HaltonSequence(int dims, std::vector<double> shift);
    explicit HaltonSequence(int dims);  // zero shift

    int dims() const { return dims_; }
    // fills out[0..dims) with point number index (1-based internally to
    // avoid the origin)
    void point(uint64_t index, double* out) const;

    static std::vector<double> random_shift(int dims, RngStream& rng);

    static constexpr int kMaxDims = 8;

  private:
    int dims_;
    std::vector<double> shift_;
};

// running compensated (Kahan) sum
struct KahanSum {
    double sum = 0, carry = 0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace stit

#endif
