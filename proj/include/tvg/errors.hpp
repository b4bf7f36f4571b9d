#pragma once

#include <stdexcept>
#include <string>

namespace tvg {

// File does not conform to the TVGL tensor format (or another on-disk
// schema). The code tells the failure classes apart.
class FormatError : public std::runtime_error {
public:
    enum class Code {
        Io,           // file missing / not readable / not writable
        BadMagic,
        BadVersion,
        BadDims,      // ndim != 3 or a zero dimension
        DimOverflow,  // declared element count does not fit in memory limits
        Truncated,    // payload shorter than the header promises
        TrailingData, // payload longer than the header promises
        NonFinite,    // NaN or Inf in the payload
    };

    FormatError(Code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Code code() const noexcept { return code_; }

private:
    Code code_;
};

// A numerical procedure could not produce a trustworthy result
// (Cholesky breakdown after jitter escalation, degenerate interpolation
// geometry, non-finite intermediate values).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tvg
