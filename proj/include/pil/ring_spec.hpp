#pragma once

#include <string>
#include <string_view>

#include "pil/ring_model.hpp"

namespace pil {

/// Ring spec grammar:
///   cyclic:m | ut2:ell,m | grassmann:ell,K | sum:[spec,spec,...] | @file.json | {inline JSON}
/// A document holds a serialized model, either bare or under a "ring" key.
/// Throws std::invalid_argument on malformed input.
RingModel parse_ring_spec(std::string_view spec);

}  // namespace pil
