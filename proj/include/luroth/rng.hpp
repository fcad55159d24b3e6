#ifndef LUROTH_RNG_HPP
#define LUROTH_RNG_HPP

#include <cstdint>

#include "luroth/scalar.hpp"

namespace luroth {

// splitmix64: tiny, portable, reproducible across platforms.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform integer in [lo, hi]
    long next_int(long lo, long hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next_u64() % span);
    }

    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
    }

    // small random rational with numerator in [-bound, bound], denominator in [1, den]
    Rat next_rat(long bound = 20, long den = 7) {
        long n = next_int(-bound, bound);
        long d = next_int(1, den);
        Rat q(n, d);
        q.canonicalize();
        return q;
    }

    Rat next_nonzero_rat(long bound = 20, long den = 7) {
        for (;;) {
            Rat q = next_rat(bound, den);
            if (q != 0) return q;
        }
    }

  private:
    uint64_t state_;
};

}  // namespace luroth

#endif
