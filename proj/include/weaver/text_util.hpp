/// @file text_util.hpp
/// @brief Small text helpers shared across modules: UTF-8 checks, line
/// splitting, trimming, glob matching, SHA-256 fingerprints.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weaver {

/// True when the byte string is well-formed UTF-8 and contains no NUL byte.
bool is_valid_utf8_text(std::string_view bytes);

/// Splits on '\n'. A trailing newline does not produce an extra empty line.
std::vector<std::string_view> split_lines(std::string_view text);

std::string_view trim(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

/// Shell-style glob against a forward-slash relative path.
/// `*` and `?` do not cross `/`; `**` matches any number of segments.
/// A pattern without `/` matches against every individual path segment.
bool glob_match(std::string_view pattern, std::string_view path);

/// Removes one wrapping markdown code fence (``` or ```lang ... ```) when the
/// whole response is fenced; the inner bytes are returned untouched. This is
/// the only normalization applied to provider responses.
std::string strip_code_fences(std::string_view response);

/// Lowercase hex SHA-256 of the given bytes.
std::string sha256_hex(std::string_view bytes);

/// First 8 bytes of SHA-256 of the given bytes, little-endian.
std::uint64_t sha256_prefix64(std::string_view bytes);

} // namespace weaver
