#pragma once

#include <string>

#include <json.hpp>

#include "qginv/subgroups.hpp"

namespace qginv {

inline constexpr const char* kVersion = "0.1.0";

/// Rewrites every float through "%.12g" so serialized reports are stable and
/// re-serializing a parsed report is byte-identical.
void canonicalize_floats(nlohmann::json& j);

/// Tool version plus the effective numeric configuration.
nlohmann::json meta_block(const Tolerances& tol);

nlohmann::json table_to_json(const InvariantTable& t);

/// One markdown table per invariant family: name, symbolic generator, value.
std::string table_to_markdown(const InvariantTable& t, const std::string& title);

}  // namespace qginv
