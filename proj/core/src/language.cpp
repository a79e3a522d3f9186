#include "clime/language.hpp"

#include "clime/errors.hpp"
#include "clime/util/text.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace clime {

namespace {

struct Profile {
    const char* language;
    std::unordered_set<std::string_view> stopwords;
};

// Compact function-word profiles. Enough to separate the supported
// languages on social-media-length texts; anything without a single hit
// is undetectable.
const std::array<Profile, 6>& profiles() {
    static const std::array<Profile, 6> p = {{
        {"de",
         {"der", "die", "das", "ein", "eine", "und", "oder", "aber", "ist", "sind",
          "war", "waren", "sein", "zu", "von", "im", "mit", "für", "auf", "dass",
          "nicht", "sehr", "mehr", "wir", "ihr", "sie", "er", "ich", "du", "den",
          "dem", "des", "auch", "wie", "wenn", "nur", "noch", "nach", "bei", "aus",
          "um", "über", "unter", "man", "kann", "haben", "hat", "hatte", "werden",
          "wird"}},
        {"en",
         {"the", "a", "an", "and", "or", "but", "is", "are", "was", "were", "be",
          "been", "to", "of", "in", "on", "at", "it", "this", "that", "with", "for",
          "as", "by", "from", "we", "you", "they", "he", "she", "not", "have", "has",
          "had", "do", "does", "did", "will", "would", "can", "could", "should",
          "about", "into", "than", "then", "there", "their", "his", "her", "its",
          "our", "your", "my", "what", "which", "who", "when", "where", "why", "how",
          "all", "any", "more", "most", "some", "such", "only", "same", "so", "very",
          "just", "because", "while", "during", "before", "after", "over", "under",
          "again", "once"}},
        {"es",
         {"el", "la", "los", "las", "un", "una", "unos", "unas", "y", "o", "pero",
          "es", "son", "era", "eran", "ser", "está", "están", "estaba", "de", "en",
          "con", "por", "para", "como", "que", "qué", "se", "su", "sus", "lo", "le",
          "les", "del", "al", "muy", "más", "sí", "ya", "cuando", "donde", "cómo",
          "todo", "toda", "todos", "nos", "nosotros", "ellos", "ellas", "usted",
          "mi", "tu", "este", "esta", "estos", "estas", "ese", "esa", "hay", "fue",
          "han", "ha", "tiene", "tienen", "hace"}},
        {"fr",
         {"le", "la", "les", "un", "une", "des", "et", "ou", "mais", "est", "sont",
          "était", "être", "à", "de", "du", "en", "dans", "avec", "pour", "par",
          "sur", "que", "qui", "ce", "cette", "ces", "se", "sa", "son", "ses", "ne",
          "pas", "très", "plus", "nous", "vous", "ils", "elles", "il", "elle", "je",
          "tu", "au", "aux", "comme", "tout", "tous", "toute", "y"}},
        {"it",
         {"il", "lo", "la", "i", "gli", "le", "un", "una", "uno", "e", "o", "ma",
          "è", "sono", "era", "erano", "essere", "di", "da", "in", "con", "per",
          "su", "che", "chi", "questo", "questa", "si", "suo", "sua", "non",
          "molto", "più", "noi", "voi", "loro", "lui", "lei", "io", "al", "del",
          "nel", "come", "tutto", "tutti", "anche", "già"}},
        {"pt",
         {"o", "a", "os", "as", "um", "uma", "uns", "umas", "e", "ou", "mas", "é",
          "são", "era", "eram", "ser", "está", "estão", "para", "por", "em", "com",
          "de", "do", "da", "dos", "das", "que", "quem", "este", "esta", "isso",
          "se", "seu", "sua", "não", "muito", "mais", "nós", "eles", "elas", "ele",
          "ela", "eu", "tu", "ao", "à", "no", "na", "nos", "nas", "como", "todo",
          "todos", "também", "já"}},
    }};
    return p;
}

bool valid_iso639_1(std::string_view code) {
    return code.size() == 2 && code[0] >= 'a' && code[0] <= 'z' && code[1] >= 'a' &&
           code[1] <= 'z';
}

}  // namespace

std::optional<LanguageGuess> StopwordLanguageDetector::detect(std::string_view text) const {
    const auto tokens = util::word_tokens(util::ascii_lower(text));
    if (tokens.empty()) return std::nullopt;

    std::size_t total = 0;
    const Profile* best = nullptr;
    std::size_t best_hits = 0;
    for (const auto& profile : profiles()) {
        std::size_t hits = 0;
        for (const auto& t : tokens) {
            if (profile.stopwords.count(t) > 0) ++hits;
        }
        total += hits;
        if (hits > best_hits) {  // profiles are alphabetical, ties keep the first
            best_hits = hits;
            best = &profile;
        }
    }
    if (total == 0 || best == nullptr) return std::nullopt;
    return LanguageGuess{best->language,
                         static_cast<double>(best_hits) / static_cast<double>(total)};
}

LanguageFilterResult filter_language(std::vector<PostRecord> records,
                                     std::string_view target,
                                     const LanguageDetector& detector,
                                     double cutoff) {
    if (!valid_iso639_1(target)) {
        throw ValidationError("invalid ISO-639-1 language code: " + std::string(target));
    }
    LanguageFilterResult result;
    for (auto& record : records) {
        std::optional<LanguageGuess> guess;
        try {
            guess = detector.detect(record.post_text);
        } catch (const std::exception&) {
            guess.reset();  // detector failure: route to dropped below
        }
        if (!guess || guess->confidence < cutoff) {
            result.dropped.push_back({std::move(record), "undetectable"});
        } else if (guess->language == target) {
            result.kept.push_back(std::move(record));
        } else {
            result.dropped.push_back({std::move(record), "detected:" + guess->language});
        }
    }
    return result;
}

}  // namespace clime
