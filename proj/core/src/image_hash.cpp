#include "clime/image_hash.hpp"

#include "clime/errors.hpp"

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include <bit>
#include <numeric>

namespace clime {

namespace {

constexpr int kCols = 9;
constexpr int kRows = 8;

std::uint64_t dhash_from_mat(const cv::Mat& gray) {
    cv::Mat small;
    cv::resize(gray, small, cv::Size(kCols, kRows), 0, 0, cv::INTER_AREA);
    std::uint64_t bits = 0;
    for (int y = 0; y < kRows; ++y) {
        const auto* row = small.ptr<unsigned char>(y);
        for (int x = 0; x < kCols - 1; ++x) {
            bits <<= 1;
            if (row[x] > row[x + 1]) bits |= 1;
        }
    }
    return bits;
}

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // keep the smaller index as root so the earliest record represents
        // its cluster
        if (b < a) std::swap(a, b);
        parent[b] = a;
    }
};

}  // namespace

std::uint64_t dhash64(const std::filesystem::path& image_path) {
    cv::Mat gray = cv::imread(image_path.string(), cv::IMREAD_GRAYSCALE);
    if (gray.empty()) {
        throw ValidationError("cannot decode image: " + image_path.string());
    }
    return dhash_from_mat(gray);
}

std::uint64_t dhash64_gray(const unsigned char* pixels, int width, int height) {
    if (pixels == nullptr || width <= 0 || height <= 0) {
        throw ValidationError("dhash64_gray: empty pixel buffer");
    }
    cv::Mat gray(height, width, CV_8UC1, const_cast<unsigned char*>(pixels));
    return dhash_from_mat(gray);
}

int hamming_distance(std::uint64_t a, std::uint64_t b) {
    return std::popcount(a ^ b);
}

DedupeResult dedupe_images(std::vector<PostRecord> records, int threshold,
                           const std::filesystem::path& base_dir) {
    if (threshold < 0) {
        throw ValidationError("dedupe threshold must be >= 0");
    }

    struct Hashed {
        std::size_t index;
        std::uint64_t hash;
    };
    DedupeResult result;
    std::vector<Hashed> hashed;
    std::vector<bool> readable(records.size(), false);
    hashed.reserve(records.size());

    for (std::size_t i = 0; i < records.size(); ++i) {
        std::filesystem::path p(records[i].image_ref);
        if (p.is_relative()) p = base_dir / p;
        try {
            hashed.push_back({i, dhash64(p)});
            readable[i] = true;
        } catch (const ValidationError&) {
            result.unreadable.push_back(records[i].record_id);
        }
    }

    UnionFind clusters(records.size());
    for (std::size_t a = 0; a < hashed.size(); ++a) {
        for (std::size_t b = a + 1; b < hashed.size(); ++b) {
            if (hamming_distance(hashed[a].hash, hashed[b].hash) <= threshold) {
                clusters.merge(hashed[a].index, hashed[b].index);
            }
        }
    }

    std::vector<std::uint64_t> hash_of(records.size(), 0);
    for (const auto& h : hashed) hash_of[h.index] = h.hash;
    std::vector<std::string> id_of(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) id_of[i] = records[i].record_id;

    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!readable[i]) {
            result.kept.push_back(std::move(records[i]));  // flagged via unreadable
            continue;
        }
        const std::size_t root = clusters.find(i);
        if (root == i) {
            result.kept.push_back(std::move(records[i]));
        } else {
            result.duplicates.push_back(
                {id_of[root], id_of[i], hamming_distance(hash_of[root], hash_of[i])});
        }
    }
    return result;
}

}  // namespace clime
