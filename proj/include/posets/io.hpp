#pragma once

#include <string>
#include <string_view>

#include "posets/poset.hpp"

namespace posets {

/// Parses either of the two accepted formats, autodetected: input whose first
/// non-blank character is '{' is treated as JSON, anything else as text.
///
/// Text format: one "x < y" relation per line; a line holding a single token
/// declares an isolated element; blank lines and "#" comments are ignored.
/// JSON format: {"elements":[...], "relations":[["x","y"],...]} with the
/// relations meaning strict <. The transitive closure is applied on load.
Poset parse_poset(std::string_view input);

Poset parse_poset_text(std::string_view input);
Poset parse_poset_json(std::string_view input);

std::string to_text(const Poset& p);

/// JSON with the cover relation only; reloading restores the identical poset.
std::string to_json(const Poset& p, bool pretty = false);

/// DOT rendering of the cover relation, elements ranked by level.
std::string to_dot(const Poset& p);

}  // namespace posets
