#include "weaver/prompts.hpp"

#include "weaver_prompt_assets.hpp"

#include <stdexcept>

namespace weaver {

std::string_view prompt_template(std::string_view name) {
    for (const auto& [asset_name, content] : prompt_assets::kAll) {
        if (asset_name == name) return content;
    }
    throw std::logic_error("unknown prompt template: " + std::string(name));
}

std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& vars) {
    // Single left-to-right pass over the template. Substituted values are
    // emitted verbatim and never re-scanned, so content containing "{{" is
    // safe. A template placeholder without a binding means the call site and
    // template drifted apart.
    std::string out;
    out.reserve(tmpl.size());
    size_t pos = 0;
    while (pos < tmpl.size()) {
        size_t open = tmpl.find("{{", pos);
        if (open == std::string_view::npos) {
            out.append(tmpl.substr(pos));
            break;
        }
        size_t close = tmpl.find("}}", open + 2);
        if (close == std::string_view::npos) {
            out.append(tmpl.substr(pos));
            break;
        }
        out.append(tmpl.substr(pos, open - pos));
        std::string key(tmpl.substr(open + 2, close - open - 2));
        auto it = vars.find(key);
        if (it == vars.end()) {
            throw std::logic_error("prompt template placeholder has no binding: " + key);
        }
        out.append(it->second);
        pos = close + 2;
    }
    return out;
}

} // namespace weaver
