/// @file prompts.hpp
/// @brief Access to the versioned prompt templates and placeholder rendering.

#pragma once

#include <map>
#include <string>
#include <string_view>

namespace weaver {

/// Returns the template with the given asset name (e.g. "plan_v1").
/// Throws std::logic_error for an unknown name.
std::string_view prompt_template(std::string_view name);

/// Replaces every "{{key}}" with vars.at(key). A placeholder left unreplaced
/// after substitution throws std::logic_error — templates and call sites are
/// versioned together.
std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& vars);

} // namespace weaver
