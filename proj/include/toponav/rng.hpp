#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace toponav {

// Seeded random stream. One instance per episode runner / worker; derive()
// spawns an independent stream so workers never share generator state.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double uniform() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
    }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

    bool bernoulli(double p) { return uniform() < p; }

    std::uint64_t raw() { return engine_(); }

    // Independent substream for (seed, tag).
    static Rng derive(std::uint64_t seed, std::string_view tag) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : tag) {
            h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
        }
        h ^= seed + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return Rng(h);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace toponav
