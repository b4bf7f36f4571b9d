#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "tvg/tensor.hpp"

namespace tvg {

struct RbfKernel {
    double length_scale = 1.0;
    double signal_variance = 1.0;
};

// k(a, b) = signal_variance * exp(-|a - b|^2 / (2 l^2))
double rbf(const std::vector<double>& a, const std::vector<double>& b, const RbfKernel& kernel);

// Multi-output GPR from the positions of the first frame (inputs X, one
// point in R^P per position) to the positions of the last frame (targets Y).
// One shared Gram matrix, P right-hand-side columns.
struct GprModel {
    int num_points = 0;  // N
    int channels = 0;    // P
    RbfKernel kernel;
    double noise_variance = 0.0;
    double jitter = 0.0;       // diagonal boost actually used, on top of noise_variance
    Eigen::MatrixXd inputs;    // N x P
    Eigen::MatrixXd targets;   // N x P
    Eigen::MatrixXd factor;    // lower-triangular L, L L^T = K + sigma2 I + jitter I
    Eigen::MatrixXd weights;   // (K + sigma2 I + jitter I)^-1 Y
};

// Fits the endpoint regression. Cholesky is attempted with jitter 0, then
// 1e-10*trace(K)/N escalating x10 up to 1e-2*trace(K)/N; an attempt is
// accepted only when the refined solve leaves a relative residual <= 1e-9.
// Throws NumericalError when the cap is reached.
GprModel fit(const Frame& first, const Frame& last, const RbfKernel& kernel, double sigma2);

// Posterior mean at the query positions (zero-mean prior): K_{*,X} weights.
Frame predict_mean(const GprModel& model, const Frame& query);

// Diagonal of the posterior covariance at the query positions, clamped at 0.
std::vector<double> predict_cov_diag(const GprModel& model, const Frame& query);

// Endpoint frames pass through unchanged; every intermediate frame is
// replaced by the posterior mean queried at its own positions.
LatentVideo gpr_smooth(const LatentVideo& z, const RbfKernel& kernel, double sigma2);

// Stand-in for the U-Net attention output; must preserve shape.
using AttentionHook = std::function<LatentVideo(const LatentVideo&)>;

// attn(z) + gamma*z + (1-gamma)*gpr_smooth(z)
LatentVideo attention_blend(const LatentVideo& z, const AttentionHook& attn, double gamma,
                            const RbfKernel& kernel, double sigma2);

// Median pairwise distance among the frame's position vectors; 1.0 when the
// median is zero (duplicate points) or there are no pairs.
double median_length_scale(const Frame& points);

}  // namespace tvg
