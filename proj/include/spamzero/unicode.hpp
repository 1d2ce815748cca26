#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spamzero::uni {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one UTF-8 sequence starting at s[i]. Advances i past the
// sequence; invalid bytes decode to U+FFFD and advance by one byte.
char32_t decode_one(std::string_view s, std::size_t& i);

std::vector<char32_t> decode(std::string_view s);

void append_utf8(std::string& out, char32_t cp);

std::size_t codepoint_count(std::string_view s);

// General category L* per the generated tables.
bool is_letter(char32_t cp);

// General category Nd.
bool is_digit(char32_t cp);

// Simple (1:1) lowercase mapping; identity when no mapping exists.
// Idempotent by construction of the tables.
char32_t to_lower(char32_t cp);

inline bool is_upper(char32_t cp) { return to_lower(cp) != cp; }

std::string lower_copy(std::string_view s);

}  // namespace spamzero::uni
