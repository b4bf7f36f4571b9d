#include "tvg/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tvg {

namespace {

void check_dims(int n, int p, size_t len, const char* what) {
    if (n < 1 || p < 1) {
        throw std::invalid_argument(std::string(what) + ": dimensions must be positive");
    }
    if (len != static_cast<size_t>(n) * p) {
        throw std::invalid_argument(std::string(what) + ": data length does not match shape");
    }
}

}  // namespace

Frame::Frame(int n, int p) : positions(n), channels(p), data(static_cast<size_t>(n) * p, 0.0) {
    check_dims(n, p, data.size(), "Frame");
}

Frame::Frame(int n, int p, std::vector<double> values)
    : positions(n), channels(p), data(std::move(values)) {
    check_dims(n, p, data.size(), "Frame");
}

LatentVideo::LatentVideo(int s, int n, int p)
    : frames(s), positions(n), channels(p),
      data(static_cast<size_t>(s) * n * p, 0.0) {
    if (s < 1) throw std::invalid_argument("LatentVideo: needs at least one frame");
    check_dims(n, p, data.size() / s, "LatentVideo");
}

LatentVideo::LatentVideo(int s, int n, int p, std::vector<double> values)
    : frames(s), positions(n), channels(p), data(std::move(values)) {
    if (s < 1) throw std::invalid_argument("LatentVideo: needs at least one frame");
    if (data.size() != static_cast<size_t>(s) * n * p || n < 1 || p < 1) {
        throw std::invalid_argument("LatentVideo: data length does not match shape");
    }
}

bool all_finite(const Frame& f) {
    return std::all_of(f.data.begin(), f.data.end(), [](double x) { return std::isfinite(x); });
}

bool all_finite(const LatentVideo& v) {
    return std::all_of(v.data.begin(), v.data.end(), [](double x) { return std::isfinite(x); });
}

bool same_shape(const Frame& a, const Frame& b) {
    return a.positions == b.positions && a.channels == b.channels;
}

bool same_shape(const LatentVideo& a, const LatentVideo& b) {
    return a.frames == b.frames && a.positions == b.positions && a.channels == b.channels;
}

void require_same_shape(const Frame& a, const Frame& b, const char* what) {
    if (!same_shape(a, b)) {
        throw std::invalid_argument(std::string(what) + ": frame shapes differ");
    }
}

void require_same_shape(const LatentVideo& a, const LatentVideo& b, const char* what) {
    if (!same_shape(a, b)) {
        throw std::invalid_argument(std::string(what) + ": tensor shapes differ");
    }
}

Frame get_frame(const LatentVideo& v, int s) {
    if (s < 0 || s >= v.frames) throw std::invalid_argument("get_frame: index out of range");
    Frame f(v.positions, v.channels);
    const size_t off = static_cast<size_t>(s) * v.frame_size();
    std::copy(v.data.begin() + off, v.data.begin() + off + v.frame_size(), f.data.begin());
    return f;
}

void set_frame(LatentVideo& v, int s, const Frame& f) {
    if (s < 0 || s >= v.frames) throw std::invalid_argument("set_frame: index out of range");
    if (f.positions != v.positions || f.channels != v.channels) {
        throw std::invalid_argument("set_frame: frame shape does not match tensor");
    }
    std::copy(f.data.begin(), f.data.end(),
              v.data.begin() + static_cast<size_t>(s) * v.frame_size());
}

LatentVideo temporal_reverse(const LatentVideo& v) {
    LatentVideo out(v.frames, v.positions, v.channels);
    const size_t fs = v.frame_size();
    for (int s = 0; s < v.frames; ++s) {
        const size_t src = static_cast<size_t>(v.frames - 1 - s) * fs;
        std::copy(v.data.begin() + src, v.data.begin() + src + fs,
                  out.data.begin() + static_cast<size_t>(s) * fs);
    }
    return out;
}

namespace {

template <typename Reduce>
Frame pool1d(const Frame& f, int window, Reduce reduce, const char* what) {
    if (window < 1 || window % 2 == 0) {
        throw std::invalid_argument(std::string(what) + ": window must be odd and positive");
    }
    if (window == 1) return f;
    const int radius = window / 2;
    Frame out(f.positions, f.channels);
    for (int n = 0; n < f.positions; ++n) {
        for (int p = 0; p < f.channels; ++p) {
            // replicate padding: indices clamp to [0, N-1]
            double acc = 0.0;
            bool first = true;
            for (int k = n - radius; k <= n + radius; ++k) {
                const int idx = std::clamp(k, 0, f.positions - 1);
                acc = first ? f.at(idx, p) : reduce(acc, f.at(idx, p));
                first = false;
            }
            out.at(n, p) = acc;
        }
    }
    return out;
}

}  // namespace

Frame avgpool1d(const Frame& f, int window) {
    Frame out = pool1d(f, window, [](double a, double b) { return a + b; }, "avgpool1d");
    if (window > 1) {
        for (double& x : out.data) x /= window;
    }
    return out;
}

Frame maxpool1d(const Frame& f, int window) {
    return pool1d(f, window, [](double a, double b) { return std::max(a, b); }, "maxpool1d");
}

Frame weighted_sum(double wa, const Frame& a, double wb, const Frame& b) {
    require_same_shape(a, b, "weighted_sum");
    Frame out(a.positions, a.channels);
    for (size_t i = 0; i < a.data.size(); ++i) out.data[i] = wa * a.data[i] + wb * b.data[i];
    return out;
}

LatentVideo weighted_sum(double wa, const LatentVideo& a, double wb, const LatentVideo& b) {
    require_same_shape(a, b, "weighted_sum");
    LatentVideo out(a.frames, a.positions, a.channels);
    for (size_t i = 0; i < a.data.size(); ++i) out.data[i] = wa * a.data[i] + wb * b.data[i];
    return out;
}

void add_scaled(LatentVideo& dst, double k, const LatentVideo& src) {
    require_same_shape(dst, src, "add_scaled");
    for (size_t i = 0; i < dst.data.size(); ++i) dst.data[i] += k * src.data[i];
}

}  // namespace tvg
