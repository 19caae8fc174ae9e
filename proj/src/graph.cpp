#include "weaver/graph.hpp"

#include "weaver/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <queue>

namespace weaver {

void DependencyGraph::add_vertex(const std::string& path) { vertices_.insert(path); }

void DependencyGraph::add_edge(const std::string& from, const std::string& to) {
    if (!has_vertex(from)) throw GraphError("edge source not in graph: " + from);
    if (!has_vertex(to)) throw GraphError("edge target not in graph: " + to);
    if (from == to) throw GraphError("self-loop rejected: " + from);
    edges_.emplace(from, to);
}

std::set<std::string> DependencyGraph::dependencies_of(const std::string& v) const {
    if (!has_vertex(v)) throw GraphError("vertex not in graph: " + v);
    std::set<std::string> out;
    for (auto it = edges_.lower_bound({v, std::string()});
         it != edges_.end() && it->first == v; ++it) {
        out.insert(it->second);
    }
    return out;
}

std::set<std::string> DependencyGraph::dependents_of(const std::string& v) const {
    if (!has_vertex(v)) throw GraphError("vertex not in graph: " + v);
    std::set<std::string> out;
    for (const auto& [from, to] : edges_) {
        if (to == v) out.insert(from);
    }
    return out;
}

DependencyGraph build_dependency_graph(const Project& project,
                                       std::vector<std::string>* warnings) {
    DependencyGraph g;
    for (const auto& [path, _] : project) g.add_vertex(path);
    for (const auto& [path, file] : project) {
        if (file.language != Language::python) continue;
        for (const auto& ref : resolved_imports(file, project, warnings)) {
            if (ref.resolution != Resolution::internal) continue;
            if (ref.resolved_path == path) {
                if (warnings != nullptr) {
                    warnings->push_back(path + ": self-import ignored");
                }
                continue;
            }
            g.add_edge(path, ref.resolved_path);
        }
    }
    return g;
}

namespace {

// Tarjan's algorithm over vertex indices; vertices are indexed in sorted
// order so the result is deterministic.
struct SccState {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> index, lowlink, stack_pos;
    std::vector<int> stack;
    int next_index = 0;
    std::vector<std::vector<int>> components;

    explicit SccState(const std::vector<std::vector<int>>& a)
        : adj(a), index(a.size(), -1), lowlink(a.size(), -1), stack_pos(a.size(), -1) {}

    void visit(int v) {
        index[v] = lowlink[v] = next_index++;
        stack_pos[v] = static_cast<int>(stack.size());
        stack.push_back(v);
        for (int w : adj[v]) {
            if (index[w] == -1) {
                visit(w);
                lowlink[v] = std::min(lowlink[v], lowlink[w]);
            } else if (stack_pos[w] != -1) {
                lowlink[v] = std::min(lowlink[v], index[w]);
            }
        }
        if (lowlink[v] == index[v]) {
            int base = stack_pos[v];
            std::vector<int> comp(stack.begin() + base, stack.end());
            for (int w : comp) stack_pos[w] = -1;
            stack.resize(static_cast<size_t>(base));
            components.push_back(std::move(comp));
        }
    }
};

} // namespace

std::vector<std::vector<std::string>> strongly_connected_components(const DependencyGraph& g) {
    std::vector<std::string> names(g.vertices().begin(), g.vertices().end());
    std::map<std::string, int> id;
    for (size_t i = 0; i < names.size(); ++i) id[names[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> adj(names.size());
    for (const auto& [from, to] : g.edges()) adj[id[from]].push_back(id[to]);

    SccState state(adj);
    for (size_t v = 0; v < names.size(); ++v) {
        if (state.index[v] == -1) state.visit(static_cast<int>(v));
    }

    // Component id per vertex, in Tarjan emission order (reverse topological
    // of the dependency DAG: a component is emitted before its dependents).
    std::vector<int> comp_of(names.size(), -1);
    for (size_t c = 0; c < state.components.size(); ++c) {
        for (int v : state.components[c]) comp_of[v] = static_cast<int>(c);
    }

    // Condensation: comp(a) -> comp(b) when a depends on b.
    size_t comp_count = state.components.size();
    std::vector<std::set<int>> comp_deps(comp_count), comp_rdeps(comp_count);
    for (const auto& [from, to] : g.edges()) {
        int cf = comp_of[id[from]], ct = comp_of[id[to]];
        if (cf != ct) {
            comp_deps[cf].insert(ct);
            comp_rdeps[ct].insert(cf);
        }
    }

    // Members lexicographic inside each component.
    std::vector<std::vector<std::string>> members(comp_count);
    for (size_t c = 0; c < comp_count; ++c) {
        for (int v : state.components[c]) members[c].push_back(names[v]);
        std::sort(members[c].begin(), members[c].end());
    }

    // Kahn over the condensation, dependencies first; ties break on the
    // lexicographically smallest member so the order is canonical.
    auto cmp = [&](int a, int b) { return members[a].front() > members[b].front(); };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    std::vector<size_t> unmet(comp_count);
    for (size_t c = 0; c < comp_count; ++c) {
        unmet[c] = comp_deps[c].size();
        if (unmet[c] == 0) ready.push(static_cast<int>(c));
    }
    std::vector<std::vector<std::string>> ordered;
    ordered.reserve(comp_count);
    while (!ready.empty()) {
        int c = ready.top();
        ready.pop();
        ordered.push_back(members[c]);
        for (int dep : comp_rdeps[c]) {
            if (--unmet[dep] == 0) ready.push(dep);
        }
    }
    return ordered;
}

std::vector<std::string> execution_order(const DependencyGraph& g,
                                         const std::set<std::string>& targets) {
    std::vector<std::string> out;
    out.reserve(targets.size());
    for (const auto& comp : strongly_connected_components(g)) {
        for (const auto& path : comp) {
            if (targets.count(path) != 0) out.push_back(path);
        }
    }
    for (const auto& path : targets) {
        if (!g.has_vertex(path)) out.push_back(path); // new files last, lexicographic
    }
    return out;
}

std::string graph_to_json(const DependencyGraph& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices()) doc["vertices"].push_back(v);
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [from, to] : g.edges()) {
        doc["edges"].push_back(nlohmann::ordered_json::array({from, to}));
    }
    return doc.dump(2) + "\n";
}

} // namespace weaver
