#pragma once

#include <string>

#include <json.hpp>

#include "airyint/bilinear_form.hpp"

namespace airyint {

using Json = nlohmann::ordered_json;

/// {"shift_a": "p/q", "shift_b": "p/q", "form": {"AB": [...], "ABp": [...],
///  "ApB": [...], "ApBp": [...]}} with ascending-power exact rational strings.
Json form_to_json(const BilinearForm& form);

/// Inverse of form_to_json. Throws Error(InvalidArgument) on schema violations.
BilinearForm form_from_json(const Json& j);

/// Compact rendering that keeps key order and prints every finite number with
/// 17 significant digits (non-finite numbers become null). Rendering the
/// result of parsing the output reproduces it byte for byte.
std::string render_json(const Json& j);

}  // namespace airyint
