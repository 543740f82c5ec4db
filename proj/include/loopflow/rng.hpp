#pragma once

#include <cstdint>

#include "loopflow/linalg.hpp"

namespace loopflow {

// splitmix64; output stream depends only on the seed, so runs are
// reproducible across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    Vec3 vec3(double lo = -1.0, double hi = 1.0) {
        Vec3 v;
        v.x() = uniform(lo, hi);
        v.y() = uniform(lo, hi);
        v.z() = uniform(lo, hi);
        return v;
    }

    Vec6 vec6(double lo = -1.0, double hi = 1.0) {
        Vec6 v;
        for (int i = 0; i < 6; ++i) v[i] = uniform(lo, hi);
        return v;
    }

private:
    std::uint64_t state_;
};

}  // namespace loopflow
