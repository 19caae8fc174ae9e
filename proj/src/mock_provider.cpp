#include "weaver/mock_provider.hpp"

#include "weaver/errors.hpp"
#include "weaver/text_util.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace weaver {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

EmbeddingVector mock_embedding(const std::string& text, std::uint64_t seed, int dimension) {
    if (dimension <= 0) throw ConfigError("embedding dimension must be positive");
    std::vector<double> values(static_cast<size_t>(dimension));
    if (text.empty()) {
        // Pinned image for the degenerate input: the constant unit vector.
        double c = 1.0 / std::sqrt(static_cast<double>(dimension));
        for (double& v : values) v = c;
        return EmbeddingVector(std::move(values));
    }
    std::uint64_t seed_state = seed;
    std::uint64_t state = sha256_prefix64(text) ^ splitmix64(seed_state);
    double norm_sq = 0.0;
    for (double& v : values) {
        // 53 random bits -> [0,1) -> [-1,1)
        double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
        v = 2.0 * u - 1.0;
        norm_sq += v * v;
    }
    double norm = std::sqrt(norm_sq);
    if (norm == 0.0) {
        double c = 1.0 / std::sqrt(static_cast<double>(dimension));
        for (double& v : values) v = c;
        return EmbeddingVector(std::move(values));
    }
    for (double& v : values) v /= norm;
    return EmbeddingVector(std::move(values));
}

MockScript parse_mock_script(const std::string& json_text, const std::string& origin) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("mock script " + origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("mock script " + origin + ": root must be an object");

    MockScript script;
    for (const auto& [key, value] : doc.items()) {
        if (key == "embedding_seed") {
            if (!value.is_number_unsigned() && !value.is_number_integer()) {
                throw ConfigError("mock script " + origin + ": embedding_seed must be an integer");
            }
            script.embedding_seed = value.get<std::uint64_t>();
        } else if (key == "entries") {
            if (!value.is_array()) {
                throw ConfigError("mock script " + origin + ": entries must be an array");
            }
            int i = 0;
            for (const auto& item : value) {
                std::string where = origin + ": entries[" + std::to_string(i++) + "]";
                if (!item.is_object()) throw ConfigError("mock script " + where + ": not an object");
                MockRule rule;
                bool have_response = false;
                for (const auto& [k, v] : item.items()) {
                    if (k == "substring") {
                        if (!v.is_string()) throw ConfigError("mock script " + where + ": substring must be a string");
                        rule.substring = v.get<std::string>();
                    } else if (k == "ordinal") {
                        if (!v.is_number_integer() || v.get<int>() <= 0) {
                            throw ConfigError("mock script " + where + ": ordinal must be a positive integer");
                        }
                        rule.ordinal = v.get<int>();
                    } else if (k == "response") {
                        if (!v.is_string()) throw ConfigError("mock script " + where + ": response must be a string");
                        rule.response = v.get<std::string>();
                        have_response = true;
                    } else {
                        throw ConfigError("mock script " + where + ": unknown field '" + k + "'");
                    }
                }
                if (rule.substring.has_value() == rule.ordinal.has_value()) {
                    throw ConfigError("mock script " + where +
                                      ": exactly one of substring/ordinal is required");
                }
                if (!have_response) throw ConfigError("mock script " + where + ": missing response");
                script.entries.push_back(std::move(rule));
            }
        } else {
            throw ConfigError("mock script " + origin + ": unknown field '" + key + "'");
        }
    }
    return script;
}

MockScript load_mock_script(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read mock script: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_mock_script(ss.str(), path.string());
}

MockProvider::MockProvider(ProviderConfig cfg, MockScript script)
    : Provider(std::move(cfg)), script_(std::move(script)) {}

std::string MockProvider::do_complete(const CompletionRequest& req) {
    int ordinal;
    {
        std::lock_guard lock(call_mutex_);
        ordinal = ++calls_;
    }
    count_attempt();
    const std::string haystack = req.system_text + "\n" + req.user_text;
    std::vector<size_t> matches;
    for (size_t i = 0; i < script_.entries.size(); ++i) {
        const MockRule& rule = script_.entries[i];
        bool hit = rule.ordinal.has_value()
                       ? *rule.ordinal == ordinal
                       : haystack.find(*rule.substring) != std::string::npos;
        if (hit) matches.push_back(i);
    }
    if (matches.empty()) {
        throw ConfigError("mock script has no entry matching completion #" +
                          std::to_string(ordinal));
    }
    if (matches.size() > 1) {
        std::string which;
        for (size_t i : matches) which += (which.empty() ? "" : ", ") + std::to_string(i);
        throw ConfigError("mock script entries {" + which + "} all match completion #" +
                          std::to_string(ordinal) + "; a request must match exactly one entry");
    }
    return script_.entries[matches.front()].response;
}

EmbeddingVector MockProvider::do_embed(const std::string& text) {
    count_attempt();
    return mock_embedding(text, script_.embedding_seed, cfg_.embedding_dimension);
}

} // namespace weaver
