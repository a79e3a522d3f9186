#pragma once

#include "clime/record.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace clime {

/// 64-bit difference hash: grayscale, area-resample to 9x8, one bit per
/// horizontally adjacent pixel pair (set when left > right).
/// Throws ValidationError when the image cannot be decoded.
std::uint64_t dhash64(const std::filesystem::path& image_path);

/// Same hash computed on an 8-bit grayscale buffer laid out row-major.
std::uint64_t dhash64_gray(const unsigned char* pixels, int width, int height);

int hamming_distance(std::uint64_t a, std::uint64_t b);

struct DuplicatePair {
    std::string kept_id;
    std::string duplicate_id;
    int distance = 0;  // to the kept cluster representative
};

struct DedupeResult {
    std::vector<PostRecord> kept;
    std::vector<DuplicatePair> duplicates;
    std::vector<std::string> unreadable;  // flagged and kept, excluded from dedup
};

/// Near-duplicate removal over record images. Clusters are the connected
/// components of the "Hamming distance <= threshold" graph, so membership
/// does not depend on input order; the earliest-ordered member of each
/// cluster is kept. Any two kept (readable) records are > threshold apart.
/// Relative image_refs resolve against base_dir.
DedupeResult dedupe_images(std::vector<PostRecord> records, int threshold,
                           const std::filesystem::path& base_dir = ".");

}  // namespace clime
