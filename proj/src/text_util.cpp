#include "weaver/text_util.hpp"

#include <openssl/evp.h>

#include <array>
#include <cctype>
#include <cstring>
#include <stdexcept>

namespace weaver {

bool is_valid_utf8_text(std::string_view bytes) {
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
    size_t n = bytes.size();
    size_t i = 0;
    while (i < n) {
        unsigned char c = p[i];
        if (c == 0x00) return false; // NUL marks binary content
        if (c < 0x80) {
            ++i;
            continue;
        }
        size_t len;
        unsigned cp;
        if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + len > n) return false;
        for (size_t k = 1; k < len; ++k) {
            if ((p[i + k] & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (p[i + k] & 0x3F);
        }
        // overlongs, surrogates, out-of-range
        if (len == 2 && cp < 0x80) return false;
        if (len == 3 && cp < 0x800) return false;
        if (len == 4 && cp < 0x10000) return false;
        if (cp >= 0xD800 && cp <= 0xDFFF) return false;
        if (cp > 0x10FFFF) return false;
        i += len;
    }
    return true;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (start < text.size()) {
        size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

namespace {

// Matches a single path segment (no '/' on either side).
bool segment_match(std::string_view pat, std::string_view seg) {
    size_t pi = 0, si = 0;
    size_t star = std::string_view::npos, star_si = 0;
    while (si < seg.size()) {
        if (pi < pat.size() && (pat[pi] == '?' || pat[pi] == seg[si])) {
            ++pi;
            ++si;
        } else if (pi < pat.size() && pat[pi] == '*') {
            star = pi++;
            star_si = si;
        } else if (star != std::string_view::npos) {
            pi = star + 1;
            si = ++star_si;
        } else {
            return false;
        }
    }
    while (pi < pat.size() && pat[pi] == '*') ++pi;
    return pi == pat.size();
}

std::vector<std::string_view> split_segments(std::string_view s) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t sep = s.find('/', start);
        if (sep == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, sep - start));
        start = sep + 1;
    }
    return out;
}

bool segments_match(const std::vector<std::string_view>& pat, size_t pi,
                    const std::vector<std::string_view>& seg, size_t si) {
    if (pi == pat.size()) return si == seg.size();
    if (pat[pi] == "**") {
        for (size_t skip = si; skip <= seg.size(); ++skip) {
            if (segments_match(pat, pi + 1, seg, skip)) return true;
        }
        return false;
    }
    if (si == seg.size()) return false;
    if (!segment_match(pat[pi], seg[si])) return false;
    return segments_match(pat, pi + 1, seg, si + 1);
}

} // namespace

bool glob_match(std::string_view pattern, std::string_view path) {
    if (pattern.find('/') == std::string_view::npos) {
        // Bare pattern: match any one segment of the path.
        for (auto seg : split_segments(path)) {
            if (segment_match(pattern, seg)) return true;
        }
        return false;
    }
    return segments_match(split_segments(pattern), 0, split_segments(path), 0);
}

std::string strip_code_fences(std::string_view response) {
    auto lines = split_lines(response);
    size_t first = 0, last = lines.size();
    while (first < last && trim(lines[first]).empty()) ++first;
    while (last > first && trim(lines[last - 1]).empty()) --last;
    if (last - first < 2) return std::string(response);

    std::string_view head = trim(lines[first]);
    std::string_view tail = trim(lines[last - 1]);
    if (!starts_with(head, "```") || tail != "```") return std::string(response);
    std::string_view lang = head.substr(3);
    for (char c : lang) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '+' && c != '-') {
            return std::string(response);
        }
    }

    std::string inner;
    for (size_t i = first + 1; i + 1 < last; ++i) {
        inner.append(lines[i]);
        inner.push_back('\n');
    }
    return inner;
}

namespace {

std::array<unsigned char, 32> sha256_digest(std::string_view bytes) {
    std::array<unsigned char, 32> digest{};
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr) throw std::runtime_error("EVP_MD_CTX_new failed");
    bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
              EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) == 1 &&
              EVP_DigestFinal_ex(ctx, digest.data(), &len) == 1;
    EVP_MD_CTX_free(ctx);
    if (!ok || len != digest.size()) throw std::runtime_error("SHA-256 computation failed");
    return digest;
}

} // namespace

std::string sha256_hex(std::string_view bytes) {
    static const char* hex = "0123456789abcdef";
    auto digest = sha256_digest(bytes);
    std::string out;
    out.reserve(64);
    for (unsigned char b : digest) {
        out.push_back(hex[b >> 4]);
        out.push_back(hex[b & 0x0F]);
    }
    return out;
}

std::uint64_t sha256_prefix64(std::string_view bytes) {
    auto digest = sha256_digest(bytes);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | digest[static_cast<size_t>(i)];
    return v;
}

} // namespace weaver
