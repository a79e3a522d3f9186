#pragma once

#include "clime/record.hpp"

#include <optional>
#include <span>
#include <vector>

namespace clime {

/// Chance-corrected agreement between two binary annotators:
/// (p_o - p_e) / (1 - p_e). When expected agreement is 1 the labels agree
/// everywhere and the result is 1.0. Throws ValidationError on empty or
/// mismatched inputs or labels outside {0,1}.
double cohen_kappa(std::span<const int> labels_a, std::span<const int> labels_b);

/// Fraction of positions where the two annotators gave the same label.
double raw_agreement(std::span<const int> labels_a, std::span<const int> labels_b);

/// Keep exactly the records every annotator marked as a match.
/// Each record needs >= 2 annotations; violators are named in the error.
std::vector<PostRecord> filter_by_agreement(std::vector<PostRecord> records);

/// Kappa and raw agreement between the first two annotations of each
/// record (reported side by side because a percentage and a kappa are not
/// the same statistic). Records need >= 2 annotations.
struct AgreementSummary {
    double kappa = 0.0;
    double raw = 0.0;
    std::size_t n = 0;
};
AgreementSummary agreement_summary(std::span<const PostRecord> records);

}  // namespace clime
