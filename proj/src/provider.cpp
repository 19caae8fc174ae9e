#include "weaver/provider.hpp"

#include "weaver/errors.hpp"
#include "weaver/http_provider.hpp"
#include "weaver/mock_provider.hpp"
#include "weaver/text_util.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <ctime>
#include <fstream>

namespace weaver {

void validate_config(const ProviderConfig& cfg) {
    if (cfg.kind == ProviderKind::http) {
        if (cfg.endpoint.empty()) throw ConfigError("http provider requires an endpoint");
        if (cfg.api_key_env.empty()) {
            throw ConfigError("http provider requires an api key environment variable name");
        }
    }
    if (cfg.embedding_dimension <= 0) throw ConfigError("embedding dimension must be positive");
    if (cfg.max_retries < 0) throw ConfigError("max_retries must be >= 0");
    if (cfg.backoff_base_ms <= 0) throw ConfigError("backoff_base_ms must be positive");
    if (cfg.max_inflight <= 0) throw ConfigError("max_inflight must be positive");
    if (cfg.timeout_ms <= 0) throw ConfigError("timeout must be positive");
}

int backoff_delay_ms(int attempt, int base_ms) {
    if (attempt > 20) attempt = 20; // caps the shift, delays stay increasing long before this
    return base_ms << attempt;
}

namespace {

std::string utc_timestamp() {
    using namespace std::chrono;
    auto now = system_clock::now();
    auto ms = duration_cast<milliseconds>(now.time_since_epoch()) % 1000;
    std::time_t t = system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec,
                  static_cast<int>(ms.count()));
    return buf;
}

} // namespace

void Transcript::record(const std::string& direction, nlohmann::ordered_json payload) {
    std::lock_guard lock(mutex_);
    log_.push_back(Entry{direction, utc_timestamp(), std::move(payload)});
}

size_t Transcript::size() const {
    std::lock_guard lock(mutex_);
    return log_.size();
}

std::vector<Transcript::Entry> Transcript::entries() const {
    std::lock_guard lock(mutex_);
    return log_;
}

void Transcript::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write transcript: " + path.string());
    std::lock_guard lock(mutex_);
    for (const auto& e : log_) {
        nlohmann::ordered_json line;
        line["direction"] = e.direction;
        line["timestamp"] = e.timestamp;
        line["payload"] = e.payload;
        out << line.dump() << "\n";
    }
}

std::vector<std::string> Transcript::completion_responses() const {
    std::lock_guard lock(mutex_);
    std::vector<std::string> out;
    for (const auto& e : log_) {
        if (e.direction == "response" && e.payload.value("kind", "") == "completion") {
            out.push_back(e.payload.value("text", ""));
        }
    }
    return out;
}

// Bounded in-flight budget shared by all callers of one provider.
class Provider::InflightGate {
public:
    explicit InflightGate(int limit) : limit_(limit) {}

    void acquire() {
        std::unique_lock lock(m_);
        cv_.wait(lock, [&] { return active_ < limit_; });
        ++active_;
    }

    void release() {
        {
            std::lock_guard lock(m_);
            --active_;
        }
        cv_.notify_one();
    }

private:
    std::mutex m_;
    std::condition_variable cv_;
    int limit_;
    int active_ = 0;
};

Provider::Provider(ProviderConfig cfg)
    : cfg_(std::move(cfg)), gate_(std::make_unique<InflightGate>(cfg_.max_inflight)) {}

std::string Provider::complete(const CompletionRequest& req) {
    if (req.user_text.empty()) throw ConfigError("completion request with empty user text");
    if (transcript_ != nullptr) {
        nlohmann::ordered_json payload;
        payload["kind"] = "completion";
        payload["model"] = cfg_.model_id;
        payload["system"] = req.system_text;
        payload["user"] = req.user_text;
        payload["temperature"] = req.temperature;
        payload["max_output_tokens"] = req.max_output_tokens;
        payload["format"] = req.format_hint == ResponseFormat::json ? "json" : "free_text";
        transcript_->record("request", std::move(payload));
    }
    gate_->acquire();
    std::string text;
    try {
        text = do_complete(req);
    } catch (...) {
        gate_->release();
        throw;
    }
    gate_->release();
    {
        std::lock_guard lock(mutex_);
        ++stats_.completions;
    }
    if (transcript_ != nullptr) {
        nlohmann::ordered_json payload;
        payload["kind"] = "completion";
        payload["text"] = text;
        transcript_->record("response", std::move(payload));
    }
    return text;
}

EmbeddingVector Provider::embed(const std::string& text) {
    if (transcript_ != nullptr) {
        nlohmann::ordered_json payload;
        payload["kind"] = "embedding";
        payload["model"] = cfg_.model_id;
        payload["input_sha256"] = sha256_hex(text);
        transcript_->record("request", std::move(payload));
    }
    gate_->acquire();
    EmbeddingVector vec;
    try {
        vec = do_embed(text);
    } catch (...) {
        gate_->release();
        throw;
    }
    gate_->release();
    {
        std::lock_guard lock(mutex_);
        ++stats_.embeddings;
    }
    if (transcript_ != nullptr) {
        nlohmann::ordered_json payload;
        payload["kind"] = "embedding";
        payload["dimension"] = vec.dimension();
        transcript_->record("response", std::move(payload));
    }
    return vec;
}

ProviderStats Provider::stats() const {
    std::lock_guard lock(mutex_);
    return stats_;
}

void Provider::count_attempt() {
    std::lock_guard lock(mutex_);
    ++stats_.transport_attempts;
}

std::unique_ptr<Provider> make_provider(const ProviderConfig& cfg) {
    validate_config(cfg);
    if (cfg.kind == ProviderKind::mock) {
        MockScript script;
        script.embedding_seed = cfg.embedding_seed;
        if (!cfg.mock_script_path.empty()) script = load_mock_script(cfg.mock_script_path);
        return std::make_unique<MockProvider>(cfg, std::move(script));
    }
    return std::make_unique<HttpProvider>(cfg);
}

} // namespace weaver
