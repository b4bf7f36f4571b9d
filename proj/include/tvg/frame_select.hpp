#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tvg/tensor.hpp"

namespace tvg {

// Injectable symmetric frame distance; the perceptual network it stands in
// for is pluggable behind this seam.
using FrameDistance = std::function<double(const Frame&, const Frame&)>;

// Euclidean norm of the elementwise difference.
double l2_distance(const Frame& a, const Frame& b);

// l2(a, b) + l2(da, db) where d is the forward difference along the
// position axis; a cheap structural proxy for perceptual distance.
double grad_l2_distance(const Frame& a, const Frame& b);

enum class FrameSource { Forward, Reverse };

struct SelectionEntry {
    FrameSource source = FrameSource::Forward;
    double forward_distance = 0.0;
    double reverse_distance = 0.0;
};

struct SelectionTrace {
    std::vector<SelectionEntry> entries;

    // One line per frame: "<index> <F|R> <forward distance> <reverse distance>".
    std::string to_text() const;
};

// Greedy close-distance merge. out[0] = fwd[0]; with r = temporal_reverse(rev),
// out[i] is whichever of fwd[i], r[i] is closer to the previously selected
// frame, ties going to the forward video.
std::pair<LatentVideo, SelectionTrace> select_frames(const LatentVideo& fwd,
                                                     const LatentVideo& rev,
                                                     const FrameDistance& distance);

}  // namespace tvg
