#pragma once

#include <cstdint>
#include <vector>

namespace prismatic {

// Counter-based splitmix64 generator. All randomness in the library flows
// through this so that a (spec, seed) pair reproduces bit-identically on any
// platform; std::uniform_int_distribution is implementation-defined and is
// deliberately avoided.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound). bound must be > 0.
    uint64_t below(uint64_t bound) {
        // Rejection sampling to kill modulo bias.
        uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

    // Fisher-Yates; deterministic given the stream position.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Derive an independent stream (for per-instance seeding in sweeps).
    Rng fork() { return Rng(next()); }

private:
    uint64_t state_;
};

}  // namespace prismatic
