#pragma once

#include "clime/record.hpp"

#include <string>
#include <vector>

namespace clime {

/// Vision-language captioner. Implementations read the record's image and
/// post text and return a descriptor paragraph. May throw ProviderError.
class Captioner {
public:
    virtual ~Captioner() = default;
    virtual std::string model_id() const = 0;
    virtual double temperature() const = 0;
    virtual int max_tokens() const = 0;
    virtual std::string caption(const PostRecord& record) = 0;
};

/// Deterministic offline captioner. With fixed_text set it always returns
/// that string; otherwise it synthesizes a descriptor from the post text.
class StubCaptioner final : public Captioner {
public:
    explicit StubCaptioner(std::string fixed_text = "", double temperature = 0.3,
                           int max_tokens = 512);

    std::string model_id() const override { return "stub"; }
    double temperature() const override { return temperature_; }
    int max_tokens() const override { return max_tokens_; }
    std::string caption(const PostRecord& record) override;

private:
    std::string fixed_text_;
    double temperature_;
    int max_tokens_;
};

/// Fill in record.descriptor via the captioner and stamp provenance.
/// A record that already has a descriptor is returned unchanged unless
/// overwrite is set. All other fields are untouched.
PostRecord generate_descriptor(PostRecord record, Captioner& captioner,
                               bool overwrite = false);

/// generate_descriptor over a batch; captioner calls run on up to
/// `parallelism` threads. Output order matches input order.
std::vector<PostRecord> caption_records(std::vector<PostRecord> records,
                                        Captioner& captioner, bool overwrite = false,
                                        int parallelism = 1);

}  // namespace clime
