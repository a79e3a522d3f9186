#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace clime::util {

/// Hex-encoded SHA-256 of `data` (64 lowercase hex chars).
std::string sha256_hex(std::string_view data);

/// FNV-1a 64-bit. Fast non-cryptographic hash for seeding stub providers.
constexpr std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// splitmix64 step; decorrelates sequential seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace clime::util
