#include "clime/record.hpp"

#include "clime/errors.hpp"

namespace clime {

using nlohmann::json;

std::string_view platform_name(Platform p) {
    switch (p) {
        case Platform::twitter: return "twitter";
        case Platform::reddit: return "reddit";
    }
    return "twitter";
}

std::optional<Platform> parse_platform(std::string_view name) {
    if (name == "twitter") return Platform::twitter;
    if (name == "reddit") return Platform::reddit;
    return std::nullopt;
}

void to_json(json& j, const CaptionProvenance& p) {
    j = json{{"model_id", p.model_id},
             {"temperature", p.temperature},
             {"max_tokens", p.max_tokens}};
}

void from_json(const json& j, CaptionProvenance& p) {
    j.at("model_id").get_to(p.model_id);
    j.at("temperature").get_to(p.temperature);
    j.at("max_tokens").get_to(p.max_tokens);
}

void to_json(json& j, const AnnotationLabel& a) {
    j = json{{"annotator_id", a.annotator_id}, {"match", a.match}};
}

void from_json(const json& j, AnnotationLabel& a) {
    j.at("annotator_id").get_to(a.annotator_id);
    j.at("match").get_to(a.match);
}

void to_json(json& j, const PostRecord& r) {
    j = json{{"record_id", r.record_id},
             {"platform", std::string(platform_name(r.platform))},
             {"post_text", r.post_text},
             {"image_ref", r.image_ref},
             {"hashtags", r.hashtags},
             {"descriptor", r.descriptor},
             {"annotations", r.annotations},
             {"relevance_flag", r.relevance_flag}};
    if (r.descriptor_provenance) {
        j["descriptor_provenance"] = *r.descriptor_provenance;
    }
}

void from_json(const json& j, PostRecord& r) {
    j.at("record_id").get_to(r.record_id);
    const auto platform = parse_platform(j.at("platform").get<std::string>());
    if (!platform) {
        throw ValidationError("unknown platform: " + j.at("platform").get<std::string>());
    }
    r.platform = *platform;
    j.at("post_text").get_to(r.post_text);
    j.at("image_ref").get_to(r.image_ref);
    j.at("hashtags").get_to(r.hashtags);
    j.at("descriptor").get_to(r.descriptor);
    j.at("annotations").get_to(r.annotations);
    j.at("relevance_flag").get_to(r.relevance_flag);
    if (j.contains("descriptor_provenance") && !j.at("descriptor_provenance").is_null()) {
        r.descriptor_provenance = j.at("descriptor_provenance").get<CaptionProvenance>();
    } else {
        r.descriptor_provenance.reset();
    }
}

std::string to_jsonl_line(const PostRecord& r) {
    // nlohmann::json keeps object keys sorted, so dump() is canonical.
    return json(r).dump();
}

void validate_record(const PostRecord& r) {
    if (r.record_id.empty()) {
        throw ValidationError("record_id must be nonempty");
    }
    if (r.post_text.empty()) {
        throw ValidationError("record '" + r.record_id + "': post_text must be nonempty");
    }
    for (const auto& a : r.annotations) {
        if (a.match != 0 && a.match != 1) {
            throw ValidationError("record '" + r.record_id +
                                  "': annotation match must be 0 or 1, got " +
                                  std::to_string(a.match));
        }
    }
    if (r.descriptor_provenance) {
        if (r.descriptor_provenance->temperature < 0.0) {
            throw ValidationError("record '" + r.record_id +
                                  "': provenance temperature must be >= 0");
        }
        if (r.descriptor_provenance->max_tokens <= 0) {
            throw ValidationError("record '" + r.record_id +
                                  "': provenance max_tokens must be > 0");
        }
    }
}

}  // namespace clime
