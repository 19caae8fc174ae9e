/// @file http_provider.hpp
/// @brief Remote chat-completions + embeddings provider over HTTP(S) JSON.

#pragma once

#include "weaver/provider.hpp"

namespace weaver {

/// Talks to an OpenAI-style or watsonx-style JSON endpoint. The API key is
/// read from the environment variable named in the config; it never appears
/// in config files or transcripts. Transport failures, timeouts, 429 and 5xx
/// responses are retried max_retries times with exponential backoff.
class HttpProvider : public Provider {
public:
    explicit HttpProvider(ProviderConfig cfg);

protected:
    std::string do_complete(const CompletionRequest& req) override;
    EmbeddingVector do_embed(const std::string& text) override;

private:
    /// POSTs the body with retry/backoff; returns the response body.
    std::string post_json(const std::string& path, const std::string& body);

    std::string api_key_;
};

} // namespace weaver
