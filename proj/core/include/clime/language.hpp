#pragma once

#include "clime/record.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clime {

struct LanguageGuess {
    std::string language;  // ISO-639-1
    double confidence = 0.0;
};

/// Pluggable language detection. Implementations must be pure functions
/// of the text. Returns nullopt when the text is undetectable.
class LanguageDetector {
public:
    virtual ~LanguageDetector() = default;
    virtual std::optional<LanguageGuess> detect(std::string_view text) const = 0;
};

/// Offline detector built from stopword profiles (en, es, fr, de, it, pt).
/// Confidence is the share of stopword hits belonging to the winning
/// language; ties break alphabetically.
class StopwordLanguageDetector final : public LanguageDetector {
public:
    std::optional<LanguageGuess> detect(std::string_view text) const override;
};

struct DroppedRecord {
    PostRecord record;
    std::string reason;  // "undetectable" or "detected:<lang>"
};

struct LanguageFilterResult {
    std::vector<PostRecord> kept;
    std::vector<DroppedRecord> dropped;
};

/// Split records by detected post_text language. kept + dropped partition
/// the input; a record is kept iff the detector sees `target` with
/// confidence >= cutoff. Detector failure routes to dropped/"undetectable".
LanguageFilterResult filter_language(std::vector<PostRecord> records,
                                     std::string_view target,
                                     const LanguageDetector& detector,
                                     double cutoff = 0.5);

}  // namespace clime
