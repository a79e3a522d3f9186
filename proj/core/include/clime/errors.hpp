#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clime {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input data, configuration, or precondition. CLI exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An external provider (chat model, classifier backend, captioner,
/// language detector) failed. CLI exit code 3.
class ProviderError : public Error {
public:
    ProviderError(const std::string& what, bool retryable = false)
        : Error(what), retryable_(retryable) {}

    bool retryable() const noexcept { return retryable_; }

private:
    bool retryable_;
};

/// Part of a batch finished and was persisted; the rest failed.
/// `missing()` names the units that did not complete. CLI exit code 4.
class PartialFailure : public Error {
public:
    PartialFailure(const std::string& what, std::vector<std::string> missing)
        : Error(what), missing_(std::move(missing)) {}

    const std::vector<std::string>& missing() const noexcept { return missing_; }

private:
    std::vector<std::string> missing_;
};

}  // namespace clime
