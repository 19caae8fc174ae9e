#include "weaver/project_io.hpp"

#include "weaver/errors.hpp"
#include "weaver/text_util.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace weaver {

std::vector<std::string> default_ignore_rules() {
    return {
        ".git", ".hg", ".svn",          // VCS metadata
        ".*",                           // hidden entries
        "__pycache__", "*.pyc",         // python build output
        "build", "dist", "*.egg-info",  // packaging output
        "node_modules", "venv",
    };
}

namespace {

bool is_ignored(const std::string& rel_path, const std::vector<std::string>& rules) {
    for (const auto& rule : rules) {
        if (glob_match(rule, rel_path)) return true;
    }
    return false;
}

std::string to_rel_forward_slash(const fs::path& p, const fs::path& root) {
    std::string rel = p.lexically_relative(root).generic_string();
    return rel;
}

bool read_file_bytes(const fs::path& p, std::string& out) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) return false;
    out = ss.str();
    return true;
}

} // namespace

Project load_project(const fs::path& root, const std::vector<std::string>& ignore_rules,
                     LoadReport* report) {
    std::error_code ec;
    if (!fs::exists(root, ec) || ec) {
        throw ConfigError("input directory does not exist: " + root.string());
    }
    if (!fs::is_directory(root, ec) || ec) {
        throw ConfigError("input path is not a directory: " + root.string());
    }

    LoadReport local;
    LoadReport& rep = report != nullptr ? *report : local;

    Project project(root.filename().string());

    // Collect candidate files first so skip decisions are order-independent.
    std::vector<fs::path> candidates;
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw ConfigError("cannot iterate input directory: " + root.string());
    for (auto end = fs::recursive_directory_iterator(); it != end; it.increment(ec)) {
        if (ec) {
            rep.warnings.push_back("directory iteration error under " + root.string());
            break;
        }
        const fs::path& p = it->path();
        std::string rel = to_rel_forward_slash(p, root);
        if (it->is_directory(ec)) {
            if (is_ignored(rel, ignore_rules)) {
                ++rep.skipped_ignored;
                it.disable_recursion_pending();
            }
            continue;
        }
        if (!it->is_regular_file(ec) || ec) continue;
        if (is_ignored(rel, ignore_rules)) {
            ++rep.skipped_ignored;
            continue;
        }
        candidates.push_back(p);
    }
    std::sort(candidates.begin(), candidates.end());

    for (const auto& p : candidates) {
        std::string rel = to_rel_forward_slash(p, root);
        std::string bytes;
        if (!read_file_bytes(p, bytes)) {
            rep.warnings.push_back("unreadable file skipped: " + rel);
            continue;
        }
        if (!is_valid_utf8_text(bytes)) {
            ++rep.skipped_binary;
            continue;
        }
        project.put(make_source_file(rel, std::move(bytes)));
    }
    return project;
}

void write_project_tree(const Project& p, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    for (const auto& [rel, file] : p) {
        fs::path target = out_dir / fs::path(rel);
        fs::create_directories(target.parent_path());
        std::ofstream out(target, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot write output file: " + target.string());
        out.write(file.content.data(), static_cast<std::streamsize>(file.content.size()));
        if (!out) throw ConfigError("short write on output file: " + target.string());
    }
}

std::string fingerprint_tree(const fs::path& root) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::error_code ec;
    if (fs::exists(root, ec) && fs::is_directory(root, ec)) {
        for (const auto& entry : fs::recursive_directory_iterator(root)) {
            if (!entry.is_regular_file()) continue;
            std::string bytes;
            if (!read_file_bytes(entry.path(), bytes)) continue;
            entries.emplace_back(to_rel_forward_slash(entry.path(), root), sha256_hex(bytes));
        }
    }
    std::sort(entries.begin(), entries.end());
    std::string acc;
    for (const auto& [rel, hash] : entries) {
        acc += rel;
        acc += '\0'; // separator keeps (path, hash) pairs unambiguous
        acc += hash;
        acc += '\n';
    }
    return sha256_hex(acc);
}

} // namespace weaver
