#include "clime/agreement.hpp"

#include "clime/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace clime {

namespace {

void check_labels(std::span<const int> a, std::span<const int> b) {
    if (a.empty() || b.empty()) {
        throw ValidationError("annotator label lists must be nonempty");
    }
    if (a.size() != b.size()) {
        throw ValidationError("annotator label lists differ in length: " +
                              std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()));
    }
    for (const auto labels : {a, b}) {
        for (int v : labels) {
            if (v != 0 && v != 1) {
                throw ValidationError("annotation labels must be 0 or 1, got " +
                                      std::to_string(v));
            }
        }
    }
}

}  // namespace

double cohen_kappa(std::span<const int> labels_a, std::span<const int> labels_b) {
    check_labels(labels_a, labels_b);
    const auto n = static_cast<double>(labels_a.size());

    std::size_t agree = 0;
    std::size_t a1 = 0;
    std::size_t b1 = 0;
    for (std::size_t i = 0; i < labels_a.size(); ++i) {
        if (labels_a[i] == labels_b[i]) ++agree;
        a1 += static_cast<std::size_t>(labels_a[i]);
        b1 += static_cast<std::size_t>(labels_b[i]);
    }
    const double po = static_cast<double>(agree) / n;
    const double pe = (static_cast<double>(a1) * static_cast<double>(b1) +
                       static_cast<double>(labels_a.size() - a1) *
                           static_cast<double>(labels_b.size() - b1)) /
                      (n * n);
    if (1.0 - pe <= 0.0) {
        // Expected agreement 1 forces identical constant labelings.
        return 1.0;
    }
    return (po - pe) / (1.0 - pe);
}

double raw_agreement(std::span<const int> labels_a, std::span<const int> labels_b) {
    check_labels(labels_a, labels_b);
    std::size_t agree = 0;
    for (std::size_t i = 0; i < labels_a.size(); ++i) {
        if (labels_a[i] == labels_b[i]) ++agree;
    }
    return static_cast<double>(agree) / static_cast<double>(labels_a.size());
}

namespace {

void require_two_annotations(std::span<const PostRecord> records) {
    std::string offenders;
    for (const auto& r : records) {
        if (r.annotations.size() < 2) {
            if (!offenders.empty()) offenders += ", ";
            offenders += r.record_id;
        }
    }
    if (!offenders.empty()) {
        throw ValidationError("records with fewer than 2 annotations: " + offenders);
    }
}

}  // namespace

std::vector<PostRecord> filter_by_agreement(std::vector<PostRecord> records) {
    require_two_annotations(records);
    std::vector<PostRecord> kept;
    kept.reserve(records.size());
    for (auto& r : records) {
        const bool unanimous = std::all_of(r.annotations.begin(), r.annotations.end(),
                                           [](const AnnotationLabel& a) { return a.match == 1; });
        if (unanimous) kept.push_back(std::move(r));
    }
    return kept;
}

AgreementSummary agreement_summary(std::span<const PostRecord> records) {
    require_two_annotations(records);
    std::vector<int> a;
    std::vector<int> b;
    a.reserve(records.size());
    b.reserve(records.size());
    for (const auto& r : records) {
        a.push_back(r.annotations[0].match);
        b.push_back(r.annotations[1].match);
    }
    return {cohen_kappa(a, b), raw_agreement(a, b), records.size()};
}

}  // namespace clime
