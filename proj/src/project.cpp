#include "weaver/project.hpp"

#include <stdexcept>

namespace weaver {

void Project::put(SourceFile file) {
    if (!is_well_formed_rel_path(file.path)) {
        throw std::invalid_argument("malformed project path: '" + file.path + "'");
    }
    files_[file.path] = std::move(file);
}

bool Project::remove(const std::string& path) { return files_.erase(path) != 0; }

const SourceFile* Project::find(const std::string& path) const {
    auto it = files_.find(path);
    return it == files_.end() ? nullptr : &it->second;
}

const SourceFile& Project::at(const std::string& path) const {
    auto it = files_.find(path);
    if (it == files_.end()) throw std::out_of_range("no such file in project: " + path);
    return it->second;
}

std::vector<std::string> Project::paths() const {
    std::vector<std::string> out;
    out.reserve(files_.size());
    for (const auto& [path, _] : files_) out.push_back(path);
    return out;
}

Project copy_project(const Project& p) { return p; }

ProjectDiff diff_projects(const Project& before, const Project& after) {
    ProjectDiff d;
    for (const auto& [path, file] : before) {
        const SourceFile* other = after.find(path);
        if (other == nullptr) {
            d.removed.insert(path);
        } else if (other->content == file.content) {
            d.unchanged.insert(path);
        } else {
            d.modified.insert(path);
        }
    }
    for (const auto& [path, _] : after) {
        if (!before.contains(path)) d.added.insert(path);
    }
    return d;
}

} // namespace weaver
