#pragma once

#include <cstdint>

#include "tvg/tensor.hpp"

namespace tvg {

// Desk-scale stand-ins for encoded endpoint latents.

// Linear crossfade between two seeded standard-normal endpoint frames.
LatentVideo make_ramp(int frames, int positions, int channels, uint64_t seed);

// Endpoint frames are Gaussian bumps centered at N/4 and 3N/4 along the
// position axis (amplitude grows mildly with the channel index);
// intermediate frames are the linear crossfade of the two. Deterministic,
// the seed is unused.
LatentVideo make_blobs(int frames, int positions, int channels);

// I.i.d. standard normal entries.
LatentVideo make_noise(int frames, int positions, int channels, uint64_t seed);

// Crossfade video between two given endpoint frames:
// frame s = (1 - s/(S-1)) first + (s/(S-1)) last.
LatentVideo make_crossfade(const Frame& first, const Frame& last, int frames);

}  // namespace tvg
