#include "weaver/vector_index.hpp"

#include "weaver/errors.hpp"
#include "weaver/text_util.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>

namespace weaver {

VectorIndex::VectorIndex(int dimension) : dimension_(dimension) {
    if (dimension <= 0) throw IndexError("index dimension must be positive");
}

void VectorIndex::put(const std::string& path, EmbeddingVector vector, std::string fingerprint) {
    if (dimension_ == 0) dimension_ = static_cast<int>(vector.dimension());
    if (static_cast<int>(vector.dimension()) != dimension_) {
        throw IndexError("vector for " + path + " has dimension " +
                         std::to_string(vector.dimension()) + ", index expects " +
                         std::to_string(dimension_));
    }
    entries_[path] = Entry{std::move(vector), std::move(fingerprint)};
}

const VectorIndex::Entry* VectorIndex::find(const std::string& path) const {
    auto it = entries_.find(path);
    return it == entries_.end() ? nullptr : &it->second;
}

bool VectorIndex::operator==(const VectorIndex& other) const {
    if (dimension_ != other.dimension_ || entries_.size() != other.entries_.size()) return false;
    for (const auto& [path, entry] : entries_) {
        const Entry* theirs = other.find(path);
        if (theirs == nullptr || theirs->fingerprint != entry.fingerprint ||
            !(theirs->vector == entry.vector)) {
            return false;
        }
    }
    return true;
}

VectorIndex build_index(const Project& project, Provider& provider, const VectorIndex* prior,
                        int parallelism) {
    if (parallelism < 1) parallelism = 1;
    VectorIndex index(provider.config().embedding_dimension);

    struct Job {
        std::string path;
        std::string fingerprint;
        const std::string* content;
    };
    std::vector<Job> jobs;
    for (const auto& [path, file] : project) {
        std::string fp = sha256_hex(file.content);
        if (prior != nullptr) {
            const VectorIndex::Entry* old = prior->find(path);
            if (old != nullptr && old->fingerprint == fp &&
                static_cast<int>(old->vector.dimension()) == index.dimension()) {
                index.put(path, old->vector, std::move(fp));
                continue;
            }
        }
        jobs.push_back(Job{path, std::move(fp), &file.content});
    }

    // Waves of bounded size; results land keyed by path, so the index is
    // identical whatever the completion order.
    for (size_t base = 0; base < jobs.size(); base += static_cast<size_t>(parallelism)) {
        size_t end = std::min(jobs.size(), base + static_cast<size_t>(parallelism));
        std::vector<std::future<EmbeddingVector>> wave;
        for (size_t i = base; i < end; ++i) {
            if (parallelism == 1) break;
            wave.push_back(std::async(std::launch::async, [&provider, &jobs, i] {
                return provider.embed(*jobs[i].content);
            }));
        }
        for (size_t i = base; i < end; ++i) {
            EmbeddingVector vec = parallelism == 1 ? provider.embed(*jobs[i].content)
                                                   : wave[i - base].get();
            index.put(jobs[i].path, std::move(vec), jobs[i].fingerprint);
        }
    }
    return index;
}

std::vector<std::pair<std::string, double>> query_top_k(const VectorIndex& index,
                                                        const EmbeddingVector& query, int k) {
    if (k < 0) throw IndexError("k must be non-negative");
    if (!index.empty() && static_cast<int>(query.dimension()) != index.dimension()) {
        throw IndexError("query dimension " + std::to_string(query.dimension()) +
                         " does not match index dimension " + std::to_string(index.dimension()));
    }
    std::vector<std::pair<std::string, double>> scored;
    scored.reserve(index.size());
    for (const auto& [path, entry] : index.entries()) {
        scored.emplace_back(path, cosine_similarity(query, entry.vector));
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (static_cast<size_t>(k) < scored.size()) scored.resize(static_cast<size_t>(k));
    return scored;
}

void persist_index(const VectorIndex& index, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IndexError("cannot write index file: " + path.string());
    nlohmann::ordered_json header;
    header["format"] = "weaver-index";
    header["version"] = 1;
    header["dimension"] = index.dimension();
    header["entry_count"] = index.size();
    out << header.dump() << "\n";
    for (const auto& [p, entry] : index.entries()) {
        nlohmann::ordered_json line;
        line["path"] = p;
        line["fingerprint"] = entry.fingerprint;
        line["values"] = entry.vector.values();
        out << line.dump() << "\n";
    }
    if (!out) throw IndexError("short write on index file: " + path.string());
}

VectorIndex load_index(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IndexError("cannot read index file: " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw IndexError("index file is empty: " + path.string());

    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw IndexError("corrupt index header: " + std::string(e.what()));
    }
    if (header.value("format", "") != "weaver-index") {
        throw IndexError("not a weaver index file: " + path.string());
    }
    if (header.value("version", -1) != 1) {
        throw IndexError("unsupported index version " + header.value("version", nlohmann::json()).dump());
    }
    int dimension = header.value("dimension", 0);
    if (dimension <= 0) throw IndexError("index header has invalid dimension");
    size_t expected = header.value("entry_count", size_t{0});

    VectorIndex index(dimension);
    size_t count = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        nlohmann::json entry;
        try {
            entry = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw IndexError("corrupt index entry: " + std::string(e.what()));
        }
        if (!entry.contains("path") || !entry.contains("fingerprint") || !entry.contains("values")) {
            throw IndexError("index entry missing required fields");
        }
        std::vector<double> values;
        for (const auto& x : entry["values"]) {
            if (!x.is_number()) throw IndexError("index entry has a non-numeric component");
            values.push_back(x.get<double>());
        }
        if (static_cast<int>(values.size()) != dimension) {
            throw IndexError("index entry for " + entry["path"].get<std::string>() +
                             " has dimension " + std::to_string(values.size()) +
                             ", header says " + std::to_string(dimension));
        }
        index.put(entry["path"].get<std::string>(), EmbeddingVector(std::move(values)),
                  entry["fingerprint"].get<std::string>());
        ++count;
    }
    if (count != expected) {
        throw IndexError("index file truncated: header promises " + std::to_string(expected) +
                         " entries, found " + std::to_string(count));
    }
    return index;
}

} // namespace weaver
