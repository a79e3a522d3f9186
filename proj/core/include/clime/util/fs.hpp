#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace clime::util {

/// Whole file as a string. Throws ValidationError when the file is missing
/// or unreadable.
std::string read_file(const std::filesystem::path& path);

/// Write `content` to a unique temp file in the target directory, then
/// rename over `path`. Readers never observe a half-written file and
/// concurrent writers of the same path resolve to one winner.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

/// mkdir -p semantics; throws on failure.
void ensure_directory(const std::filesystem::path& dir);

}  // namespace clime::util
