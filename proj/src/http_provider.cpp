#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "weaver/http_provider.hpp"

#include "weaver/errors.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

namespace weaver {

HttpProvider::HttpProvider(ProviderConfig cfg) : Provider(std::move(cfg)) {
    const char* key = std::getenv(cfg_.api_key_env.c_str());
    if (key == nullptr || *key == '\0') {
        throw ConfigError("api key environment variable is not set: " + cfg_.api_key_env);
    }
    api_key_ = key;
}

std::string HttpProvider::post_json(const std::string& path, const std::string& body) {
    std::string last_cause = "no attempt made";
    int attempts = cfg_.max_retries + 1;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(
                std::chrono::milliseconds(backoff_delay_ms(attempt - 1, cfg_.backoff_base_ms)));
        }
        count_attempt();
        httplib::Client client(cfg_.endpoint);
        client.set_connection_timeout(0, cfg_.timeout_ms * 1000LL);
        client.set_read_timeout(0, cfg_.timeout_ms * 1000LL);
        client.set_write_timeout(0, cfg_.timeout_ms * 1000LL);
        httplib::Headers headers{{"Authorization", "Bearer " + api_key_}};
        auto res = client.Post(path, headers, body, "application/json");
        if (!res) {
            last_cause = "transport error: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status == 429 || res->status >= 500) {
            last_cause = "server returned status " + std::to_string(res->status);
            continue;
        }
        if (res->status != 200) {
            throw ProviderError("provider rejected request (" + std::to_string(res->status) +
                                "): " + res->body.substr(0, 400));
        }
        return res->body;
    }
    throw ProviderError("provider unreachable after " + std::to_string(attempts) +
                        " attempts; last cause: " + last_cause);
}

std::string HttpProvider::do_complete(const CompletionRequest& req) {
    nlohmann::ordered_json body;
    std::string path;
    if (cfg_.wire == WireStyle::watsonx) {
        path = "/ml/v1/text/chat?version=2024-05-31";
        body["model_id"] = cfg_.model_id;
        if (!cfg_.watsonx_project_id.empty()) body["project_id"] = cfg_.watsonx_project_id;
    } else {
        path = "/v1/chat/completions";
        body["model"] = cfg_.model_id;
    }
    auto messages = nlohmann::ordered_json::array();
    if (!req.system_text.empty()) {
        messages.push_back({{"role", "system"}, {"content", req.system_text}});
    }
    messages.push_back({{"role", "user"}, {"content", req.user_text}});
    body["messages"] = std::move(messages);
    body["temperature"] = req.temperature;
    body["max_tokens"] = req.max_output_tokens;
    if (req.format_hint == ResponseFormat::json && cfg_.wire == WireStyle::openai) {
        body["response_format"] = {{"type", "json_object"}};
    }

    std::string raw = post_json(path, body.dump());
    try {
        auto doc = nlohmann::json::parse(raw);
        return doc.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError(std::string("unexpected completion response shape: ") + e.what());
    }
}

EmbeddingVector HttpProvider::do_embed(const std::string& text) {
    nlohmann::ordered_json body;
    std::string path;
    bool watsonx = cfg_.wire == WireStyle::watsonx;
    if (watsonx) {
        path = "/ml/v1/text/embeddings?version=2024-05-31";
        body["model_id"] = cfg_.model_id;
        if (!cfg_.watsonx_project_id.empty()) body["project_id"] = cfg_.watsonx_project_id;
        body["inputs"] = nlohmann::ordered_json::array({text});
    } else {
        path = "/v1/embeddings";
        body["model"] = cfg_.model_id;
        body["input"] = text;
    }

    std::string raw = post_json(path, body.dump());
    try {
        auto doc = nlohmann::json::parse(raw);
        const auto& vec = watsonx ? doc.at("results").at(0).at("embedding")
                                  : doc.at("data").at(0).at("embedding");
        std::vector<double> values;
        values.reserve(vec.size());
        for (const auto& x : vec) values.push_back(x.get<double>());
        if (values.empty()) throw ProviderError("provider returned an empty embedding");
        return EmbeddingVector(std::move(values));
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError(std::string("unexpected embedding response shape: ") + e.what());
    }
}

} // namespace weaver
