#pragma once

#include <cstddef>
#include <vector>

namespace tvg {

// One time slice of a latent video: N spatial positions with P channels
// each, stored row-major position-then-channel.
struct Frame {
    int positions = 0;
    int channels = 0;
    std::vector<double> data;

    Frame() = default;
    Frame(int n, int p);
    Frame(int n, int p, std::vector<double> values);

    double& at(int n, int p) { return data[static_cast<size_t>(n) * channels + p]; }
    double at(int n, int p) const { return data[static_cast<size_t>(n) * channels + p]; }
    size_t size() const { return data.size(); }
};

// Rank-3 latent tensor: S frames x N positions x P channels, row-major
// frame-then-position-then-channel. Transition operations require S >= 2;
// the container itself also holds single-frame tensors (e.g. embeddings
// serialized as (1, L, D)).
struct LatentVideo {
    int frames = 0;
    int positions = 0;
    int channels = 0;
    std::vector<double> data;

    LatentVideo() = default;
    LatentVideo(int s, int n, int p);
    LatentVideo(int s, int n, int p, std::vector<double> values);

    double& at(int s, int n, int p) {
        return data[(static_cast<size_t>(s) * positions + n) * channels + p];
    }
    double at(int s, int n, int p) const {
        return data[(static_cast<size_t>(s) * positions + n) * channels + p];
    }
    size_t frame_size() const { return static_cast<size_t>(positions) * channels; }
    size_t size() const { return data.size(); }
};

bool all_finite(const Frame& f);
bool all_finite(const LatentVideo& v);
bool same_shape(const Frame& a, const Frame& b);
bool same_shape(const LatentVideo& a, const LatentVideo& b);
void require_same_shape(const Frame& a, const Frame& b, const char* what);
void require_same_shape(const LatentVideo& a, const LatentVideo& b, const char* what);

Frame get_frame(const LatentVideo& v, int s);
void set_frame(LatentVideo& v, int s, const Frame& f);

// Frame order flipped: output frame i == input frame S-1-i.
LatentVideo temporal_reverse(const LatentVideo& v);

// Per-channel sliding mean/max along the position axis, stride 1,
// replicate padding at the boundaries; shape preserved. window must be odd.
Frame avgpool1d(const Frame& f, int window);
Frame maxpool1d(const Frame& f, int window);

// wa*a + wb*b elementwise.
Frame weighted_sum(double wa, const Frame& a, double wb, const Frame& b);
LatentVideo weighted_sum(double wa, const LatentVideo& a, double wb, const LatentVideo& b);
void add_scaled(LatentVideo& dst, double k, const LatentVideo& src);

}  // namespace tvg
