#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tvg/conditioning.hpp"
#include "tvg/diffusion.hpp"
#include "tvg/fbif.hpp"
#include "tvg/frame_select.hpp"
#include "tvg/gpr.hpp"
#include "tvg/tensor.hpp"

namespace tvg {

struct KernelConfig {
    std::string mode = "median";  // "median" | "fixed"
    double length_scale = 1.0;    // used when mode == "fixed"
    double signal_variance = 1.0;
    bool operator==(const KernelConfig&) const = default;
};

struct SlerpConfig {
    double w_start = 0.9;
    double w_end = 0.1;
    bool operator==(const SlerpConfig&) const = default;
};

struct DdimConfig {
    int sample_steps = 10;  // K
    int train_steps = 1000; // T
    double beta_min = 1e-4;
    double beta_max = 0.02;
    bool operator==(const DdimConfig&) const = default;
};

struct DenoiserConfig {
    std::string kind = "toy-crossfade";  // the only sandbox denoiser
    double noise_scale = 0.0;            // > 0 wraps it in seeded perturbation
    bool operator==(const DenoiserConfig&) const = default;
};

struct IoConfig {
    std::string endpoints;  // TVGL whose first/last frames are x0 and xS
    std::string prompt_a;   // TVGL (1,L,D); empty -> seeded stand-in embedding
    std::string prompt_b;
    std::string output = "output.tvgl";
    std::string report = "report.json";
    std::string trace = "trace.txt";
    bool operator==(const IoConfig&) const = default;
};

struct PipelineConfig {
    int frames = 16;     // S
    int positions = 0;   // 0 = take from the endpoints tensor
    int channels = 0;
    double gamma = 0.9;
    double image_blend = 0.5;  // beta of the endpoint image blend
    SlerpConfig slerp;
    KernelConfig kernel;
    double noise_variance = 1e-4;  // GPR sigma^2
    FusionWeights fusion;
    std::string fusion_mode = "lockstep";  // "lockstep" | "independent"
    DdimConfig ddim;
    std::string metric = "grad_l2";  // "grad_l2" | "l2"
    uint64_t seed = 0;
    DenoiserConfig denoiser;
    IoConfig io;

    bool operator==(const PipelineConfig&) const;
};

nlohmann::json config_to_json(const PipelineConfig& c);
PipelineConfig config_from_json(const nlohmann::json& j);
void save_config(const PipelineConfig& c, const std::filesystem::path& path);
PipelineConfig load_config(const std::filesystem::path& path);

struct StageTiming {
    std::string stage;
    double milliseconds = 0.0;
};

struct RunReport {
    PipelineConfig config;
    std::vector<StageTiming> timings;  // wall clock; excluded from determinism
    SelectionTrace trace;
    std::vector<double> distance_profile;  // S-1 consecutive-frame distances

    nlohmann::json to_json() const;
};

// Test seams; everything here overrides the corresponding config-derived
// default. Pointees must outlive the run call.
struct RunOverrides {
    const LatentVideo* endpoints = nullptr;
    const Embedding* prompt_a = nullptr;
    const Embedding* prompt_b = nullptr;
    const Denoiser* forward_denoiser = nullptr;
    const Denoiser* reverse_denoiser = nullptr;
    AttentionHook attention;  // default: zero map
    FrameDistance metric;
    bool skip_output = false;  // do not write output/report/trace files
};

// End-to-end transition generation: conditioning, bidirectional DDIM with
// the GPR blend hook (fused across directions in lockstep mode), greedy
// frame selection, artifact output.
std::pair<LatentVideo, RunReport> run(const PipelineConfig& config,
                                      const RunOverrides& overrides = {});

// Entry i = distance(frame i+1, frame i); S-1 entries.
std::vector<double> consecutive_distance_profile(const LatentVideo& v, const FrameDistance& d);

FrameDistance metric_by_name(const std::string& name);

}  // namespace tvg
