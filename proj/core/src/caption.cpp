#include "clime/caption.hpp"

#include "clime/errors.hpp"
#include "clime/util/text.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace clime {

StubCaptioner::StubCaptioner(std::string fixed_text, double temperature, int max_tokens)
    : fixed_text_(std::move(fixed_text)),
      temperature_(temperature),
      max_tokens_(max_tokens) {}

std::string StubCaptioner::caption(const PostRecord& record) {
    if (!fixed_text_.empty()) return fixed_text_;

    std::vector<std::string> keywords;
    for (const auto& token : util::word_tokens(record.post_text)) {
        if (token.size() > 3) keywords.push_back(util::ascii_lower(token));
        if (keywords.size() == 6) break;
    }
    std::string out = "The image and caption discuss ";
    if (keywords.empty()) {
        out += "the post \"" + record.post_text + "\"";
    } else {
        for (std::size_t i = 0; i < keywords.size(); ++i) {
            if (i > 0) out += (i + 1 == keywords.size()) ? " and " : ", ";
            out += keywords[i];
        }
    }
    out += ". The visual reinforces the message of the text and frames it as a"
           " climate concern for the audience of " +
           std::string(platform_name(record.platform)) + ".";
    return out;
}

PostRecord generate_descriptor(PostRecord record, Captioner& captioner, bool overwrite) {
    if (record.image_ref.empty()) {
        throw ValidationError("record '" + record.record_id + "': image_ref is empty");
    }
    if (record.post_text.empty()) {
        throw ValidationError("record '" + record.record_id + "': post_text is empty");
    }
    if (!record.descriptor.empty() && !overwrite) {
        return record;  // no-op contract
    }
    const std::string text = captioner.caption(record);
    if (util::trim(text).empty()) {
        throw ValidationError("captioner '" + captioner.model_id() +
                              "' returned an empty caption for record '" +
                              record.record_id + "'");
    }
    record.descriptor = text;
    record.descriptor_provenance = CaptionProvenance{
        captioner.model_id(), captioner.temperature(), captioner.max_tokens()};
    return record;
}

std::vector<PostRecord> caption_records(std::vector<PostRecord> records,
                                        Captioner& captioner, bool overwrite,
                                        int parallelism) {
    const std::size_t n = records.size();
    if (n == 0) return records;
    const int workers =
        std::clamp(parallelism, 1, static_cast<int>(std::min<std::size_t>(n, 64)));

    std::vector<PostRecord> out(n);
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                out[i] = generate_descriptor(std::move(records[i]), captioner, overwrite);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

}  // namespace clime
