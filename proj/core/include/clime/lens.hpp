#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace clime {

/// The three analytical framings a descriptor is run through before
/// scoring.
enum class LensKind { actionability, criticality, justice };

inline constexpr std::array<LensKind, 3> kAllLenses = {
    LensKind::actionability, LensKind::criticality, LensKind::justice};

std::string_view lens_name(LensKind lens);
std::optional<LensKind> parse_lens(std::string_view name);

/// Prompt template for a lens. Contains the "{description}" slot exactly
/// once and nothing else variable.
std::string_view lens_template(LensKind lens);

/// Template with the slot replaced by `descriptor`; no other mutation.
/// Throws ValidationError when the descriptor is empty.
std::string render_prompt(LensKind lens, std::string_view descriptor);

}  // namespace clime
