#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace clime {

/// A chat model that can answer a single prompt. Implementations throw
/// ProviderError on failure (retryable for transport-level problems).
class ChatModelClient {
public:
    virtual ~ChatModelClient() = default;
    virtual std::string model_id() const = 0;
    virtual std::string generate(const std::string& prompt, double temperature) = 0;
};

/// Capped exponential backoff: base, 2*base, 4*base, ... up to max_delay.
/// `sleep` is injectable so tests do not wait.
struct RetryPolicy {
    int max_attempts = 3;
    std::chrono::milliseconds base_delay{1000};
    std::chrono::milliseconds max_delay{30000};
    std::function<void(std::chrono::milliseconds)> sleep;

    std::chrono::milliseconds delay_for_attempt(int attempt) const;
};

/// Run `call`, retrying retryable ProviderErrors per the policy.
std::string call_with_retries(const RetryPolicy& policy,
                              const std::function<std::string()>& call);

/// Offline chat model: the response is a pure function of
/// (model_id, prompt). Supports failure injection for tests.
class StubChatClient final : public ChatModelClient {
public:
    explicit StubChatClient(std::string model_id = "stub-chat");

    std::string model_id() const override { return model_id_; }
    std::string generate(const std::string& prompt, double temperature) override;

    /// Every generate() whose prompt contains `needle` throws a retryable
    /// ProviderError.
    void fail_when_prompt_contains(std::string needle);
    int calls() const { return calls_.load(); }

private:
    std::string model_id_;
    std::vector<std::string> fail_needles_;
    std::atomic<int> calls_{0};
};

/// Chat-completions HTTP adapter. Credentials come from the environment
/// variable named in options (never from config values).
class HttpChatClient final : public ChatModelClient {
public:
    struct Options {
        std::string base_url;                       // e.g. "https://api.example.com"
        std::string path = "/v1/chat/completions";  // OpenAI-style endpoint
        std::string model_id;
        std::string api_key_env;  // name of the env var holding the key
        int max_tokens = 0;       // 0 = provider default, no cap
        int timeout_seconds = 60;
    };

    explicit HttpChatClient(Options options);

    std::string model_id() const override { return options_.model_id; }
    std::string generate(const std::string& prompt, double temperature) override;

private:
    Options options_;
};

}  // namespace clime
