/// @file provider.hpp
/// @brief Uniform abstraction over the generative backend: completion and
/// embedding calls, provider configuration, and the request/response
/// transcript.

#pragma once

#include "weaver/embedding.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace weaver {

enum class ResponseFormat { free_text, json };

struct CompletionRequest {
    std::string system_text;
    std::string user_text; // must be non-empty
    int max_output_tokens = 4096;
    double temperature = 0.0;
    ResponseFormat format_hint = ResponseFormat::free_text;
};

enum class ProviderKind { http, mock };
enum class WireStyle { openai, watsonx };

struct ProviderConfig {
    ProviderKind kind = ProviderKind::mock;
    std::string endpoint;                     // http only, e.g. "http://host:8080"
    std::string model_id = "default-model";
    std::string api_key_env = "WEAVER_API_KEY"; // name of the env var holding the key
    WireStyle wire = WireStyle::openai;
    std::string watsonx_project_id;
    int timeout_ms = 30000;
    int max_retries = 2;
    int backoff_base_ms = 250;
    int embedding_dimension = 64;
    int max_inflight = 4;
    std::string mock_script_path;             // mock only
    std::uint64_t embedding_seed = 0;         // mock only; a script overrides it
};

/// Throws ConfigError when the configuration is unusable
/// (http without endpoint or api_key_env, nonpositive dimension, ...).
void validate_config(const ProviderConfig& cfg);

/// Exponential backoff schedule: base * 2^attempt, strictly increasing.
int backoff_delay_ms(int attempt, int base_ms);

struct ProviderStats {
    int completions = 0;
    int embeddings = 0;
    int transport_attempts = 0;
};

/// Append-only, order-preserving log of all provider traffic in a run.
class Transcript {
public:
    struct Entry {
        std::string direction; // "request" | "response"
        std::string timestamp; // ISO-8601 UTC
        nlohmann::ordered_json payload;
    };

    void record(const std::string& direction, nlohmann::ordered_json payload);
    size_t size() const;
    std::vector<Entry> entries() const;

    /// Line-delimited JSON, one entry per line. Throws ConfigError when the
    /// path cannot be written.
    void save(const std::filesystem::path& path) const;

    /// Completion responses, in call order. Feeding these back as ordinal
    /// mock-script entries replays the run.
    std::vector<std::string> completion_responses() const;

private:
    mutable std::mutex mutex_;
    std::vector<Entry> log_;
};

/// Blocking call-and-return provider surface. Implementations are shareable;
/// the base class serializes transcript/stat updates and enforces the
/// configured in-flight bound.
class Provider {
public:
    explicit Provider(ProviderConfig cfg);
    virtual ~Provider() = default;

    /// Returns the raw completion text. Throws ProviderError on transport
    /// exhaustion, ConfigError on mock-script misconfiguration.
    std::string complete(const CompletionRequest& req);

    EmbeddingVector embed(const std::string& text);

    void attach_transcript(Transcript* transcript) { transcript_ = transcript; }
    ProviderStats stats() const;
    const ProviderConfig& config() const { return cfg_; }

protected:
    virtual std::string do_complete(const CompletionRequest& req) = 0;
    virtual EmbeddingVector do_embed(const std::string& text) = 0;

    void count_attempt();
    ProviderConfig cfg_;

private:
    class InflightGate;
    Transcript* transcript_ = nullptr;
    mutable std::mutex mutex_;
    ProviderStats stats_;
    std::unique_ptr<InflightGate> gate_;
};

/// Builds the provider named by cfg.kind (loading the mock script for mock
/// configs). Throws ConfigError on invalid configuration.
std::unique_ptr<Provider> make_provider(const ProviderConfig& cfg);

} // namespace weaver
