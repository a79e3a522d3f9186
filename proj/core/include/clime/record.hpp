#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace clime {

enum class Platform { twitter, reddit };

std::string_view platform_name(Platform p);
std::optional<Platform> parse_platform(std::string_view name);

/// How a descriptor was produced.
struct CaptionProvenance {
    std::string model_id;
    double temperature = 0.3;
    int max_tokens = 512;

    bool operator==(const CaptionProvenance&) const = default;
};

/// One human judgment: does the descriptor match the post? 1 yes, 0 no.
struct AnnotationLabel {
    std::string annotator_id;
    int match = 0;

    bool operator==(const AnnotationLabel&) const = default;
};

/// One corpus entry: a social media post, its image, the generated
/// descriptor, and any human annotations.
struct PostRecord {
    std::string record_id;
    Platform platform = Platform::twitter;
    std::string post_text;
    std::string image_ref;
    std::vector<std::string> hashtags;
    std::string descriptor;
    std::optional<CaptionProvenance> descriptor_provenance;
    std::vector<AnnotationLabel> annotations;
    bool relevance_flag = false;

    bool operator==(const PostRecord&) const = default;
};

void to_json(nlohmann::json& j, const CaptionProvenance& p);
void from_json(const nlohmann::json& j, CaptionProvenance& p);
void to_json(nlohmann::json& j, const AnnotationLabel& a);
void from_json(const nlohmann::json& j, AnnotationLabel& a);
void to_json(nlohmann::json& j, const PostRecord& r);
void from_json(const nlohmann::json& j, PostRecord& r);

/// Canonical single-line JSON form (sorted keys, no whitespace).
/// load -> serialize -> load is a fixpoint.
std::string to_jsonl_line(const PostRecord& r);

/// Throws ValidationError when a record violates its invariants
/// (empty record_id, empty post_text, annotation match outside {0,1},
/// provenance temperature < 0 or max_tokens <= 0).
void validate_record(const PostRecord& r);

}  // namespace clime
