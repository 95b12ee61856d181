#pragma once

#include <cstdint>
#include <random>

namespace qct {

/// Seedable stream used by every sampler. The engine is mt19937_64 and
/// bounded draws use threshold rejection, so a seed gives the same sequence on
/// every platform (std::uniform_int_distribution does not guarantee that).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % n;
        }
    }

    int below(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

private:
    std::mt19937_64 engine_;
};

// splitmix64 finaliser; derives independent shard seeds from one master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace qct
