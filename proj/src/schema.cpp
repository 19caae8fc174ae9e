#include "weaver/schema.hpp"

#include "weaver/errors.hpp"
#include "weaver/text_util.hpp"

#include <algorithm>
#include <set>

namespace weaver {

FeatureRequest make_feature_request(std::string text) {
    if (trim(text).empty()) throw ConfigError("feature request must be non-empty");
    return FeatureRequest{std::move(text)};
}

bool ProjectSchema::has_path(const std::string& path) const {
    return std::any_of(records.begin(), records.end(),
                       [&](const SchemaRecord& r) { return r.path == path; });
}

namespace {

// Leading excerpt, cut at a line boundary where possible.
std::string leading_excerpt(const std::string& content, size_t budget) {
    if (content.size() <= budget) return content;
    std::string head = content.substr(0, budget);
    size_t nl = head.rfind('\n');
    if (nl != std::string::npos && nl > 0) head.resize(nl + 1);
    return head;
}

} // namespace

ProjectSchema build_schema(const Project& project, const DependencyGraph& graph,
                           const VectorIndex& index, const FeatureRequest& request, int k,
                           Provider& provider, size_t snippet_budget) {
    ProjectSchema schema;

    std::set<std::string> snippet_paths;
    if (k > 0 && !index.empty()) {
        EmbeddingVector query = provider.embed(request.text);
        for (const auto& [path, score] : query_top_k(index, query, k)) {
            (void)score;
            snippet_paths.insert(path);
        }
    }

    for (const auto& [path, file] : project) {
        SchemaRecord rec;
        rec.path = path;
        rec.language = file.language;
        rec.byte_count = file.content.size();
        if (file.language == Language::python) {
            for (const auto& ref : extract_imports(file)) rec.imports.push_back(ref.raw_module);
        }
        if (snippet_paths.count(path) != 0) {
            rec.snippet = leading_excerpt(file.content, snippet_budget);
        }
        schema.records.push_back(std::move(rec));
    }
    for (const auto& edge : graph.edges()) schema.edges.push_back(edge);
    return schema;
}

DependencyGraph schema_graph(const ProjectSchema& schema) {
    DependencyGraph g;
    for (const auto& rec : schema.records) g.add_vertex(rec.path);
    for (const auto& [from, to] : schema.edges) g.add_edge(from, to);
    return g;
}

std::string schema_to_json(const ProjectSchema& schema) {
    nlohmann::ordered_json doc;
    doc["files"] = nlohmann::ordered_json::array();
    for (const auto& rec : schema.records) {
        nlohmann::ordered_json r;
        r["path"] = rec.path;
        r["language"] = to_string(rec.language);
        r["bytes"] = rec.byte_count;
        r["imports"] = rec.imports;
        if (rec.snippet.has_value()) r["snippet"] = *rec.snippet;
        doc["files"].push_back(std::move(r));
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [from, to] : schema.edges) {
        doc["edges"].push_back(nlohmann::ordered_json::array({from, to}));
    }
    return doc.dump(2);
}

} // namespace weaver
