#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>

namespace clime::util {

/// Injectable time source. Pipelines running against stub providers use a
/// fixed clock so artifacts are byte-identical across runs.
using Clock = std::function<std::chrono::system_clock::time_point()>;

Clock system_clock_fn();
Clock fixed_clock(std::int64_t epoch_seconds);

/// "1970-01-01T00:00:00Z" style UTC timestamp.
std::string iso8601_utc(std::chrono::system_clock::time_point tp);

}  // namespace clime::util
