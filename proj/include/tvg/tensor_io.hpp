#pragma once

#include <array>
#include <cstdint>
#include <filesystem>

#include "tvg/tensor.hpp"

namespace tvg {

// TVGL tensor file, little-endian:
//   magic 'T' 'V' 'G' 'L', u32 version=1, u32 ndim=3, u32 dims S,N,P,
//   then S*N*P IEEE-754 binary32 values row-major. No padding, no trailing
//   bytes. Values are stored in single precision; in-memory doubles are
//   quantized on write.
inline constexpr std::array<unsigned char, 4> kTvglMagic = {0x54, 0x56, 0x47, 0x4C};
inline constexpr uint32_t kTvglVersion = 1;
inline constexpr size_t kTvglHeaderBytes = 24;

void write_tensor(const LatentVideo& v, const std::filesystem::path& path);
LatentVideo read_tensor(const std::filesystem::path& path);

}  // namespace tvg
