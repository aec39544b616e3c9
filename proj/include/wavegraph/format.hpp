#pragma once

#include <string>

#include "wavegraph/bigreal.hpp"

namespace wavegraph {

/// Shortest decimal that round-trips to the same double (std::to_chars).
/// The pinned formatting that makes artifacts byte-reproducible.
std::string format_double(double v);

/// Extended-precision value as a decimal string of precision/3 significant
/// digits (never fewer than 6) — lossless for the stored precision.
std::string format_real(const Real& v);

}  // namespace wavegraph
