#pragma once

#include <array>
#include <cstdint>

#include "tvg/tensor.hpp"

namespace tvg {

// Deterministic seeded generator: xoshiro256** state initialized via
// splitmix64, normal draws via Box-Muller. The stream depends only on the
// seed, never on the platform or standard library (std::normal_distribution
// is implementation-defined and unusable for a reproducibility contract).
class SeededRng {
public:
    static constexpr const char* kAlgorithm = "xoshiro256**+splitmix64+box-muller";

    explicit SeededRng(uint64_t seed);

    uint64_t next_u64();
    double uniform01();  // [0, 1)
    double normal();     // standard normal

private:
    std::array<uint64_t, 4> state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// One splitmix64 round over a ^ golden-ratio-scrambled b; used to derive
// per-subsystem seeds from a single run seed.
uint64_t mix_seed(uint64_t a, uint64_t b);

// Same shape as v, entries i.i.d. standard normal drawn from rng in
// row-major order.
LatentVideo gaussian_noise_like(const LatentVideo& v, SeededRng& rng);

}  // namespace tvg
