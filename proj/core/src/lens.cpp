#include "clime/lens.hpp"

#include "clime/errors.hpp"

namespace clime {

namespace {

constexpr std::string_view kSlot = "{description}";

constexpr std::string_view kActionability =
    "Description: {description}\n"
    "\n"
    "Instruction: Analyze the climate-related message in the above description "
    "through an actionability lens. Respond in one unified paragraph that "
    "summarizes the key climate issues, identifies actionable solutions, "
    "evaluates their feasibility (high/medium/low), assesses explicit "
    "commitments (who, what, when, how), and highlights risks or unaddressed "
    "challenges. Do not output any extra information other than this analysis "
    "in your response.";

constexpr std::string_view kCriticality =
    "Description: {description}\n"
    "\n"
    "Instruction: Critically evaluate the climate-related message in the above "
    "description. Respond in one unified paragraph that identifies core claims, "
    "assesses evidence quality, highlights unsubstantiated claims or "
    "oversimplified arguments, evaluates engagement with competing viewpoints, "
    "and analyzes its impact on climate discourse. Do not output any extra "
    "information other than this analysis in your response.";

constexpr std::string_view kJustice =
    "Description: {description}\n"
    "\n"
    "Instruction: Analyze the climate-related message in the above description "
    "through a justice lens. Respond in one unified paragraph that identifies "
    "centered/absent communities, assesses distribution of responsibility, "
    "evaluates acknowledgment of historical power imbalances, examines impacts "
    "on marginalized groups, and considers inclusion of cultural contexts. Do "
    "not output any extra information other than this analysis in your "
    "response.";

}  // namespace

std::string_view lens_name(LensKind lens) {
    switch (lens) {
        case LensKind::actionability: return "actionability";
        case LensKind::criticality: return "criticality";
        case LensKind::justice: return "justice";
    }
    return "actionability";
}

std::optional<LensKind> parse_lens(std::string_view name) {
    if (name == "actionability") return LensKind::actionability;
    if (name == "criticality") return LensKind::criticality;
    if (name == "justice") return LensKind::justice;
    return std::nullopt;
}

std::string_view lens_template(LensKind lens) {
    switch (lens) {
        case LensKind::actionability: return kActionability;
        case LensKind::criticality: return kCriticality;
        case LensKind::justice: return kJustice;
    }
    return kActionability;
}

std::string render_prompt(LensKind lens, std::string_view descriptor) {
    if (descriptor.empty()) {
        throw ValidationError("cannot render a lens prompt for an empty descriptor");
    }
    const std::string_view tpl = lens_template(lens);
    const std::size_t pos = tpl.find(kSlot);
    std::string out;
    out.reserve(tpl.size() + descriptor.size());
    out.append(tpl.substr(0, pos));
    out.append(descriptor);
    out.append(tpl.substr(pos + kSlot.size()));
    return out;
}

}  // namespace clime
