#ifndef STIT_RNG_HPP
#define STIT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace stit {

// Counter-based seeding: a stream is derived from (master seed, experiment
// id, replication index) via splitmix64 chaining, so replications are
// independent and reproducible regardless of worker count.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class RngStream {
  public:
    RngStream() : RngStream(0, 0, 0) {}
    explicit RngStream(uint64_t master, uint64_t experiment_id = 0,
                       uint64_t replication = 0) {
        uint64_t s = master;
        uint64_t a = splitmix64(s);
        s ^= experiment_id * 0xd1342543de82ef95ULL;
        uint64_t b = splitmix64(s);
        s ^= replication * 0xaf251af3b0f025b5ULL;
        uint64_t c = splitmix64(s);
        std::seed_seq seq{a, b, c, splitmix64(s)};
        gen_.seed(seq);
    }

    uint64_t bits() { return gen_(); }

    // uniform on (0,1); transforms are hand-rolled so streams are stable
    // across standard-library implementations
    double uniform() {
        return (static_cast<double>(bits() >> 11) + 0.5) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double exponential(double rate) { return -std::log(uniform()) / rate; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = uniform(), v = uniform();
        double r = std::sqrt(-2.0 * std::log(u));
        double theta = 2.0 * M_PI * v;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    // uniform index in [0, n)
    uint64_t index(uint64_t n) {
        return static_cast<uint64_t>(uniform() * static_cast<double>(n)) % n;
    }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0;
};

}  // namespace stit

#endif
