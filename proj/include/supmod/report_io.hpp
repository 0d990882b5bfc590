#pragma once

#include <span>
#include <string>
#include <string_view>

#include "supmod/moduli.hpp"
#include "supmod/verify.hpp"

namespace supmod {

/// {space_id, config_fingerprint, entries: [...], summary: {pass, fail, degenerate}}.
/// Undefined sides (Degenerate entries) are written as null.
std::string report_to_json(const InequalityReport& report);
InequalityReport report_from_json(std::string_view text);

/// 0 when no entry failed, 1 otherwise.
int report_exit_code(const InequalityReport& report);

std::string xi_to_json(const XiEstimate& estimate);

std::string conjecture_to_json(std::span<const ConjectureRow> rows);
std::string conjecture_to_csv(std::span<const ConjectureRow> rows);

}  // namespace supmod
