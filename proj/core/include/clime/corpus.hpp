#pragma once

#include "clime/record.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace clime {

enum class CorpusFormat { jsonl };

/// One malformed input line; the load continues past it.
struct LineIssue {
    std::size_t line = 0;  // 1-based
    std::string message;
};

struct LoadReport {
    std::vector<PostRecord> records;
    std::vector<LineIssue> issues;
};

/// Counters along the curation pipeline. Non-increasing left to right.
struct CorpusStats {
    std::size_t total = 0;
    std::size_t kept_after_language = 0;
    std::size_t kept_after_relevance = 0;
    std::size_t kept_after_dedup = 0;
    std::optional<double> kappa;
};

void to_json(nlohmann::json& j, const CorpusStats& s);

/// Load and validate a JSONL corpus. Malformed lines are collected into
/// the report, never silently dropped. A duplicate record_id rejects the
/// whole load (ValidationError naming both lines); a missing file throws.
LoadReport load_corpus(const std::filesystem::path& path,
                       CorpusFormat format = CorpusFormat::jsonl);

/// Canonical JSONL (one sorted-key object per line). Atomic replace.
void save_corpus(const std::filesystem::path& path, std::span<const PostRecord> records);

/// Keep records whose relevance_flag is set (the persisted outcome of
/// manual relevance review).
std::vector<PostRecord> filter_relevance(std::vector<PostRecord> records);

}  // namespace clime
