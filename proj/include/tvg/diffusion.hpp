#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tvg/conditioning.hpp"
#include "tvg/tensor.hpp"

namespace tvg {

// T-step variance schedule. beta[t-1] holds beta_t for t = 1..T;
// alpha_bar[t] holds the running product for t = 0..T with alpha_bar[0] = 1
// (the terminal target of the deterministic reverse process).
struct DdimSchedule {
    int steps = 0;  // T
    std::vector<double> beta;
    std::vector<double> alpha;
    std::vector<double> alpha_bar;

    double alpha_bar_at(int t) const;

    // k timestep indices, evenly spaced and ending at T, strictly increasing.
    std::vector<int> select_timesteps(int k) const;
};

DdimSchedule linear_schedule(int steps, double beta_min = 1e-4, double beta_max = 0.02);

// sqrt(abar_t) x0 + sqrt(1 - abar_t) eps, 1 <= t <= T.
LatentVideo forward_noise(const LatentVideo& x0, int t, const LatentVideo& eps,
                          const DdimSchedule& sched);

// The two halves of the deterministic (eta = 0) DDIM update:
//   x0_hat = (z_t - sqrt(1 - abar_t) eps_hat) / sqrt(abar_t)
//   z_prev = sqrt(abar_prev) x0_hat + sqrt(1 - abar_prev) eps_hat
LatentVideo ddim_x0_estimate(const LatentVideo& z_t, int t, const LatentVideo& eps_hat,
                             const DdimSchedule& sched);
LatentVideo ddim_recompose(const LatentVideo& x0_hat, int t_prev, const LatentVideo& eps_hat,
                           const DdimSchedule& sched);
LatentVideo ddim_step(const LatentVideo& z_t, int t, int t_prev, const LatentVideo& eps_hat,
                      const DdimSchedule& sched);

// Denoising conditions; the toy denoisers ignore them, a real model would
// not. Pointees must outlive the sampling call.
struct Conditions {
    const Frame* image = nullptr;
    const EmbeddingSchedule* text = nullptr;
};

class Denoiser {
public:
    virtual ~Denoiser() = default;
    // Shape-preserving, deterministic given (z_t, t, conditions).
    virtual LatentVideo predict_noise(const LatentVideo& z_t, int t,
                                      const Conditions& conds) const = 0;
};

// Predicts the oracle noise that maps z_t toward a fixed target latent:
// eps_hat = (z_t - sqrt(abar_t) target) / sqrt(1 - abar_t). Exact DDIM with
// this denoiser recovers the target, which closes the loop for testing the
// sampler without any learned model.
class ToyDenoiser : public Denoiser {
public:
    ToyDenoiser(LatentVideo target, DdimSchedule sched);
    LatentVideo predict_noise(const LatentVideo& z_t, int t,
                              const Conditions& conds) const override;
    const LatentVideo& target() const { return target_; }

private:
    LatentVideo target_;
    DdimSchedule sched_;
};

// Wraps another denoiser and adds scale * pseudo-noise drawn from a stream
// seeded by mix_seed(seed, t); deterministic given (z_t, t).
class PerturbedDenoiser : public Denoiser {
public:
    PerturbedDenoiser(const Denoiser& inner, double scale, uint64_t seed);
    LatentVideo predict_noise(const LatentVideo& z_t, int t,
                              const Conditions& conds) const override;

private:
    const Denoiser& inner_;
    double scale_;
    uint64_t seed_;
};

// Endpoint anchoring state: the clean first/last latent frames plus the
// fixed noise used to re-noise them to any timestep. At t = 0 the pinned
// frames are exactly the clean ones.
struct EndpointAnchor {
    Frame first_clean;
    Frame last_clean;
    Frame first_noise;
    Frame last_noise;
};

void apply_anchor(LatentVideo& z, const EndpointAnchor& anchor, int t, const DdimSchedule& sched);

// Per-step latent hook, applied to the x0-space estimate before the step is
// recomposed (this is where attention blending and fusion attach).
using LatentHook = std::function<LatentVideo(const LatentVideo& x0_hat, int t, int t_prev)>;

struct SampleHooks {
    std::optional<EndpointAnchor> anchor;
    LatentHook on_x0;
};

// Runs k deterministic DDIM steps over the evenly spaced sub-schedule.
// When an anchor is present the init is pinned at the starting timestep and
// frames 0 / S-1 are re-pinned after every step; the x0 hook, when set,
// runs once per step. k = 0 returns init unchanged.
LatentVideo sample(const LatentVideo& init, const Denoiser& denoiser, const DdimSchedule& sched,
                   int k, const SampleHooks& hooks = {}, const Conditions& conds = {});

}  // namespace tvg
