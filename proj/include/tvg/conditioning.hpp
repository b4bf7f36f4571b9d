#pragma once

#include <vector>

#include "tvg/tensor.hpp"

namespace tvg {

// Prompt embedding matrix: L tokens x D dims, row-major. The encoder that
// produces these lives upstream; they arrive as data.
struct Embedding {
    int tokens = 0;
    int dim = 0;
    std::vector<double> data;

    Embedding() = default;
    Embedding(int l, int d);
    Embedding(int l, int d, std::vector<double> values);

    double& at(int l, int d) { return data[static_cast<size_t>(l) * dim + d]; }
    double at(int l, int d) const { return data[static_cast<size_t>(l) * dim + d]; }
    size_t size() const { return data.size(); }
};

// S per-frame embeddings, uniform shape.
struct EmbeddingSchedule {
    std::vector<Embedding> frames;

    int size() const { return static_cast<int>(frames.size()); }
    const Embedding& at(int s) const { return frames[s]; }
};

// beta*x0 + (1-beta)*xS elementwise.
Frame blend_images(const Frame& x0, const Frame& xS, double beta = 0.5);

// Spherical interpolation on the flattened L*D vectors (one global angle per
// pair). Near-parallel inputs (sin theta < 1e-7) fall back to linear
// interpolation; antiparallel inputs and two zero inputs are degeneracy
// errors. per_token interpolates each token row with its own angle instead.
Embedding slerp(const Embedding& a, const Embedding& b, double alpha, bool per_token = false);

// Frame s uses alpha_s = 1 - (w_start + s*(w_end - w_start)/(S-1)): the
// a-side weight runs linearly from w_start at frame 0 to w_end at the last
// frame.
EmbeddingSchedule slerp_schedule(const Embedding& a, const Embedding& b, int frames,
                                 double w_start = 0.9, double w_end = 0.1,
                                 bool per_token = false);

// Embeddings travel in the TVGL tensor format with dims (1, L, D); a full
// schedule serializes as (S, L, D).
LatentVideo to_video(const Embedding& e);
LatentVideo to_video(const EmbeddingSchedule& sched);
Embedding embedding_from_video(const LatentVideo& v, int frame = 0);
EmbeddingSchedule schedule_from_video(const LatentVideo& v);

}  // namespace tvg
