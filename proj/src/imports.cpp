#include "weaver/imports.hpp"

#include "weaver/text_util.hpp"

#include <cctype>

namespace weaver {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !is_ident_start(s[0])) return false;
    for (char c : s) {
        if (!is_ident_char(c)) return false;
    }
    return true;
}

// "a.b.c" with every segment an identifier.
bool is_dotted_name(std::string_view s) {
    if (s.empty()) return false;
    size_t start = 0;
    while (true) {
        size_t dot = s.find('.', start);
        std::string_view seg =
            dot == std::string_view::npos ? s.substr(start) : s.substr(start, dot - start);
        if (!is_identifier(seg)) return false;
        if (dot == std::string_view::npos) return true;
        start = dot + 1;
    }
}

// Leading dots followed by an optional dotted name ("..pkg.mod", "." ...).
bool is_relative_module(std::string_view s) {
    size_t dots = 0;
    while (dots < s.size() && s[dots] == '.') ++dots;
    if (dots == 0) return false;
    std::string_view rest = s.substr(dots);
    return rest.empty() || is_dotted_name(rest);
}

bool is_module_text(std::string_view s) { return is_dotted_name(s) || is_relative_module(s); }

// Cuts an end-of-line comment, honoring string quotes on the line.
std::string_view strip_line_comment(std::string_view line) {
    char quote = 0;
    bool escape = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (escape) {
            escape = false;
            continue;
        }
        if (quote != 0) {
            if (c == '\\') escape = true;
            else if (c == quote) quote = 0;
            continue;
        }
        if (c == '\'' || c == '"') quote = c;
        else if (c == '#') return line.substr(0, i);
    }
    return line;
}

std::vector<std::string_view> split_on_commas(std::string_view s) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(trim(s.substr(start)));
            break;
        }
        out.push_back(trim(s.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

// "mod as alias" -> "mod"; plain "mod" stays.
std::string_view drop_alias(std::string_view item) {
    size_t as_pos = item.find(" as ");
    if (as_pos == std::string_view::npos) return trim(item);
    return trim(item.substr(0, as_pos));
}

void warn(std::vector<std::string>* warnings, const std::string& msg) {
    if (warnings != nullptr) warnings->push_back(msg);
}

} // namespace

std::vector<ImportRef> extract_imports(const SourceFile& file,
                                       std::vector<std::string>* warnings) {
    std::vector<ImportRef> refs;
    if (file.language != Language::python) {
        warn(warnings, file.path + ": not a python file, no imports extracted");
        return refs;
    }

    int line_no = 0;
    for (auto raw_line : split_lines(file.content)) {
        ++line_no;
        std::string_view line = trim(strip_line_comment(raw_line));
        if (starts_with(line, "import ") || line == "import") {
            std::string_view rest = trim(line.substr(6));
            if (rest.empty()) {
                warn(warnings, file.path + ":" + std::to_string(line_no) +
                                   ": unparseable import statement skipped");
                continue;
            }
            std::vector<ImportRef> line_refs;
            bool ok = true;
            for (auto item : split_on_commas(rest)) {
                std::string_view mod = drop_alias(item);
                if (!is_dotted_name(mod)) {
                    ok = false;
                    break;
                }
                ImportRef ref;
                ref.raw_module = std::string(mod);
                ref.origin = file.path;
                ref.line = line_no;
                line_refs.push_back(std::move(ref));
            }
            if (!ok) {
                warn(warnings, file.path + ":" + std::to_string(line_no) +
                                   ": unparseable import statement skipped");
                continue;
            }
            for (auto& r : line_refs) refs.push_back(std::move(r));
        } else if (starts_with(line, "from ") || line == "from") {
            size_t import_kw = line.find(" import ");
            bool trailing_import = import_kw == std::string_view::npos && ends_with(line, " import");
            std::string_view mod_part = trailing_import
                                            ? trim(line.substr(4, line.size() - 4 - 7))
                                            : (import_kw != std::string_view::npos
                                                   ? trim(line.substr(4, import_kw - 4))
                                                   : std::string_view{});
            if (mod_part.empty() || !is_module_text(mod_part)) {
                warn(warnings, file.path + ":" + std::to_string(line_no) +
                                   ": unparseable from-import skipped");
                continue;
            }
            ImportRef ref;
            ref.raw_module = std::string(mod_part);
            ref.origin = file.path;
            ref.is_from = true;
            ref.line = line_no;
            if (!trailing_import) {
                std::string_view names = trim(line.substr(import_kw + 8));
                // A parenthesized list may continue on later lines; take what
                // is visible here, which is all the resolver needs.
                if (!names.empty() && names.front() == '(') names.remove_prefix(1);
                if (!names.empty() && names.back() == ')') names.remove_suffix(1);
                for (auto item : split_on_commas(names)) {
                    std::string_view name = drop_alias(item);
                    if (name == "*" || is_identifier(name)) {
                        if (name != "*") ref.from_names.emplace_back(name);
                    } else if (!name.empty()) {
                        warn(warnings, file.path + ":" + std::to_string(line_no) +
                                           ": unreadable imported name '" + std::string(name) +
                                           "' ignored");
                    }
                }
            }
            refs.push_back(std::move(ref));
        }
    }
    return refs;
}

namespace {

// Directory of a project path, "" for root-level files.
std::string dir_of(std::string_view path) {
    size_t sep = path.rfind('/');
    return sep == std::string_view::npos ? std::string() : std::string(path.substr(0, sep));
}

std::string join(const std::string& dir, std::string_view tail) {
    if (dir.empty()) return std::string(tail);
    if (tail.empty()) return dir;
    return dir + "/" + std::string(tail);
}

std::string dots_to_slashes(std::string_view dotted) {
    std::string out(dotted);
    for (char& c : out) {
        if (c == '.') c = '/';
    }
    return out;
}

enum class Candidate { none, file, package, both };

Candidate probe(const Project& project, const std::string& module_path, std::string* hit) {
    const std::string file_form = module_path + ".py";
    const std::string pkg_form = module_path + "/__init__.py";
    bool has_file = !module_path.empty() && project.contains(file_form);
    bool has_pkg = project.contains(pkg_form);
    if (has_file && has_pkg) {
        *hit = pkg_form;
        return Candidate::both;
    }
    if (has_pkg) {
        *hit = pkg_form;
        return Candidate::package;
    }
    if (has_file) {
        *hit = file_form;
        return Candidate::file;
    }
    return Candidate::none;
}

bool dir_exists_in_project(const Project& project, const std::string& dir) {
    if (dir.empty()) return false;
    const std::string prefix = dir + "/";
    for (const auto& [path, _] : project) {
        if (starts_with(path, prefix)) return true;
    }
    return false;
}

} // namespace

ImportRef resolve_import(ImportRef ref, const Project& project,
                         std::vector<std::string>* warnings) {
    std::string module_path; // slash-joined module location, may be ""
    bool escaped_root = false;

    if (!ref.raw_module.empty() && ref.raw_module[0] == '.') {
        size_t dots = 0;
        while (dots < ref.raw_module.size() && ref.raw_module[dots] == '.') ++dots;
        std::string base = dir_of(ref.origin);
        for (size_t up = 1; up < dots; ++up) {
            if (base.empty()) {
                escaped_root = true;
                break;
            }
            base = dir_of(base);
        }
        if (!escaped_root) {
            module_path = join(base, dots_to_slashes(ref.raw_module.substr(dots)));
        }
    } else {
        module_path = dots_to_slashes(ref.raw_module);
    }

    if (escaped_root) {
        warn(warnings, ref.origin + ":" + std::to_string(ref.line) + ": relative import '" +
                           ref.raw_module + "' escapes the project root");
        ref.resolution = Resolution::external;
        return ref;
    }

    std::string hit;
    Candidate c = probe(project, module_path, &hit);
    if (c == Candidate::both) {
        warn(warnings, ref.origin + ":" + std::to_string(ref.line) + ": module '" +
                           ref.raw_module + "' matches both " + module_path + ".py and " + hit +
                           "; using the package form");
    }
    if (c != Candidate::none) {
        ref.resolution = Resolution::internal;
        ref.resolved_path = hit;
        return ref;
    }

    // From-import fallback: the imported names may themselves be modules
    // (`from utils import helpers` with no utils/__init__.py).
    if (ref.is_from) {
        for (const auto& name : ref.from_names) {
            std::string chain = join(module_path, name);
            std::string chain_hit;
            Candidate cc = probe(project, chain, &chain_hit);
            if (cc != Candidate::none) {
                ref.resolution = Resolution::internal;
                ref.resolved_path = chain_hit;
                return ref;
            }
        }
    }

    if (dir_exists_in_project(project, module_path)) {
        warn(warnings, ref.origin + ":" + std::to_string(ref.line) + ": module '" +
                           ref.raw_module + "' names directory '" + module_path +
                           "/' with no __init__.py; treated as external");
    }
    ref.resolution = Resolution::external;
    return ref;
}

std::vector<ImportRef> resolved_imports(const SourceFile& file, const Project& project,
                                        std::vector<std::string>* warnings) {
    std::vector<ImportRef> refs = extract_imports(file, warnings);
    for (auto& ref : refs) ref = resolve_import(std::move(ref), project, warnings);
    return refs;
}

} // namespace weaver
