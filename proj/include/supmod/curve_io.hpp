#pragma once

#include <string>
#include <string_view>

#include "supmod/moduli.hpp"

namespace supmod {

/// `param,value` header, one row per sample, 12 significant digits.
std::string curve_to_csv(const ModulusCurve& curve);

/// Parses curve_to_csv output. CSV carries no metadata, so the caller
/// supplies it.
ModulusCurve curve_from_csv(std::string_view text, ModulusKind kind, std::string space_id,
                            std::string config_fingerprint);

/// {kind, space_id, config_fingerprint, points: [[param, value], ...]}
std::string curve_to_json(const ModulusCurve& curve);
ModulusCurve curve_from_json(std::string_view text);

/// Single polyline with axes and labels.
std::string curve_to_svg(const ModulusCurve& curve);

}  // namespace supmod
