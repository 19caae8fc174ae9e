/// @file mock_provider.hpp
/// @brief Deterministic scripted provider for offline and golden runs.

#pragma once

#include "weaver/provider.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weaver {

/// One scripted completion: matched by substring (against system + user
/// text) or by call ordinal (1-based). Exactly one of the two is set.
struct MockRule {
    std::optional<std::string> substring;
    std::optional<int> ordinal;
    std::string response;
};

struct MockScript {
    std::vector<MockRule> entries;
    std::uint64_t embedding_seed = 0;
};

/// Strict JSON loader:
///   {"embedding_seed": 0, "entries": [{"substring"|"ordinal": ..., "response": ...}]}
/// Unknown fields or a rule without exactly one match key are ConfigErrors.
MockScript load_mock_script(const std::filesystem::path& path);
MockScript parse_mock_script(const std::string& json_text, const std::string& origin);

/// Seeded-hash embedding used by the mock provider: the content hash seeds a
/// splitmix64 stream expanded to `dimension` components, normalized to unit
/// length. Empty text maps to the fixed all-constant unit vector.
EmbeddingVector mock_embedding(const std::string& text, std::uint64_t seed, int dimension);

class MockProvider : public Provider {
public:
    MockProvider(ProviderConfig cfg, MockScript script);

    const MockScript& script() const { return script_; }

protected:
    /// Returns the unique matching script entry's response. No entry or more
    /// than one matching entry is a test-configuration error.
    std::string do_complete(const CompletionRequest& req) override;
    EmbeddingVector do_embed(const std::string& text) override;

private:
    MockScript script_;
    int calls_ = 0;
    std::mutex call_mutex_;
};

} // namespace weaver
