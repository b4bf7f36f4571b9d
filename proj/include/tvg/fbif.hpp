#pragma once

#include <vector>

#include "tvg/tensor.hpp"

namespace tvg {

// Weights of the frequency-aware fusion: the low-frequency coefficient runs
// linearly from lambda_start at frame 0 to lambda_end at the last frame; the
// high-frequency terms carry the fixed lambda_freq. window drives both
// pooling operators.
struct FusionWeights {
    double lambda_start = 0.9;
    double lambda_end = 0.1;
    double lambda_freq = 0.1;
    int window = 3;

    // Schedule seen from the reverse-oriented trajectory: lambda'_s =
    // 1 - lambda_{S-1-s}, i.e. endpoints (1-lambda_end, 1-lambda_start).
    // With the defaults this equals the original schedule, and the fused
    // video of the reverse direction is exactly the temporal reverse of the
    // forward one.
    FusionWeights mirrored() const;

    bool operator==(const FusionWeights&) const = default;
};

std::vector<double> lambda_schedule(int frames, const FusionWeights& w);

// Frequency-aware bidirectional fusion. z_rev is the raw reverse-direction
// latent; with r = temporal_reverse(z_rev), frame s of the output is
//   lambda_s avgpool(z_fwd_s) + (1-lambda_s) avgpool(r_s)
//   + lambda_freq maxpool(z_fwd_s) + lambda_freq maxpool(r_s).
// Total weight per frame is 1 + 2 lambda_freq; no renormalization.
LatentVideo fuse(const LatentVideo& z_fwd, const LatentVideo& z_rev, const FusionWeights& w);

}  // namespace tvg
