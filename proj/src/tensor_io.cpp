#include "tvg/tensor_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

#include "tvg/errors.hpp"

namespace tvg {

namespace {

// 2^31 elements (~8 GiB binary32) is far beyond desk scale; anything larger
// is treated as a corrupt header rather than an allocation request.
constexpr uint64_t kMaxElements = uint64_t{1} << 31;

void put_u32(std::string& buf, uint32_t v) {
    buf.push_back(static_cast<char>(v & 0xFF));
    buf.push_back(static_cast<char>((v >> 8) & 0xFF));
    buf.push_back(static_cast<char>((v >> 16) & 0xFF));
    buf.push_back(static_cast<char>((v >> 24) & 0xFF));
}

uint32_t get_u32(const unsigned char* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

}  // namespace

void write_tensor(const LatentVideo& v, const std::filesystem::path& path) {
    if (!all_finite(v)) {
        throw FormatError(FormatError::Code::NonFinite,
                          "write_tensor: tensor contains NaN or Inf");
    }
    std::string buf;
    buf.reserve(kTvglHeaderBytes + v.size() * 4);
    buf.append(reinterpret_cast<const char*>(kTvglMagic.data()), kTvglMagic.size());
    put_u32(buf, kTvglVersion);
    put_u32(buf, 3);
    put_u32(buf, static_cast<uint32_t>(v.frames));
    put_u32(buf, static_cast<uint32_t>(v.positions));
    put_u32(buf, static_cast<uint32_t>(v.channels));
    for (double x : v.data) {
        put_u32(buf, std::bit_cast<uint32_t>(static_cast<float>(x)));
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError(FormatError::Code::Io,
                          "write_tensor: cannot open '" + path.string() + "' for writing");
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) {
        throw FormatError(FormatError::Code::Io,
                          "write_tensor: short write to '" + path.string() + "'");
    }
}

LatentVideo read_tensor(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError(FormatError::Code::Io,
                          "read_tensor: cannot open '" + path.string() + "'");
    }
    std::vector<unsigned char> raw((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());

    if (raw.size() < kTvglHeaderBytes) {
        throw FormatError(FormatError::Code::Truncated, "read_tensor: file shorter than header");
    }
    if (std::memcmp(raw.data(), kTvglMagic.data(), kTvglMagic.size()) != 0) {
        throw FormatError(FormatError::Code::BadMagic, "read_tensor: bad magic bytes");
    }
    const uint32_t version = get_u32(raw.data() + 4);
    if (version != kTvglVersion) {
        throw FormatError(FormatError::Code::BadVersion,
                          "read_tensor: unsupported version " + std::to_string(version));
    }
    const uint32_t ndim = get_u32(raw.data() + 8);
    if (ndim != 3) {
        throw FormatError(FormatError::Code::BadDims,
                          "read_tensor: expected 3 dims, got " + std::to_string(ndim));
    }
    const uint32_t s = get_u32(raw.data() + 12);
    const uint32_t n = get_u32(raw.data() + 16);
    const uint32_t p = get_u32(raw.data() + 20);
    if (s == 0 || n == 0 || p == 0) {
        throw FormatError(FormatError::Code::BadDims, "read_tensor: zero dimension");
    }
    const uint64_t count = static_cast<uint64_t>(s) * n * p;
    if (count > kMaxElements) {
        throw FormatError(FormatError::Code::DimOverflow,
                          "read_tensor: declared element count " + std::to_string(count) +
                              " exceeds the supported maximum");
    }
    const uint64_t payload = raw.size() - kTvglHeaderBytes;
    if (payload < count * 4) {
        throw FormatError(FormatError::Code::Truncated,
                          "read_tensor: payload holds " + std::to_string(payload / 4) +
                              " values, header declares " + std::to_string(count));
    }
    if (payload > count * 4) {
        throw FormatError(FormatError::Code::TrailingData,
                          "read_tensor: trailing bytes after payload");
    }

    LatentVideo v(static_cast<int>(s), static_cast<int>(n), static_cast<int>(p));
    const unsigned char* cur = raw.data() + kTvglHeaderBytes;
    for (uint64_t i = 0; i < count; ++i, cur += 4) {
        v.data[i] = static_cast<double>(std::bit_cast<float>(get_u32(cur)));
    }
    if (!all_finite(v)) {
        throw FormatError(FormatError::Code::NonFinite,
                          "read_tensor: payload contains NaN or Inf");
    }
    return v;
}

}  // namespace tvg
