#pragma once

#include <string>

#include "chosal/image.hpp"
#include "chosal/saliency_map.hpp"

namespace chosal {

/// S(p) = S_CHO(p) * S_GC(p), min-max normalized to [0,1]. Commutative.
/// Throws std::invalid_argument on dimension mismatch.
SaliencyMap fuse(const SaliencyMap& cho, const SaliencyMap& gc);

/// round(value * 255), half away from zero. Values must already be in [0,1].
GrayImage to_u8(const SaliencyMap& map);

/// Raw dump: two u32 LE dims (width, height), then row-major f32 LE values.
void write_raw_map(const SaliencyMap& map, const std::string& path);
SaliencyMap read_raw_map(const std::string& path);

}  // namespace chosal
