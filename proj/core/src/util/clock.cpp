#include "clime/util/clock.hpp"

#include <cstdio>
#include <ctime>

namespace clime::util {

Clock system_clock_fn() {
    return [] { return std::chrono::system_clock::now(); };
}

Clock fixed_clock(std::int64_t epoch_seconds) {
    const auto tp = std::chrono::system_clock::time_point(std::chrono::seconds(epoch_seconds));
    return [tp] { return tp; };
}

std::string iso8601_utc(std::chrono::system_clock::time_point tp) {
    const std::time_t t = std::chrono::system_clock::to_time_t(tp);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ",
                  tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday,
                  tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

}  // namespace clime::util
