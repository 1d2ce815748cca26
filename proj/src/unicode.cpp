#include "spamzero/unicode.hpp"

#include <algorithm>
#include <iterator>

namespace spamzero::uni {

namespace {

struct CpRange {
    char32_t lo;
    char32_t hi;
};

struct LowerRun {
    char32_t first;
    char32_t last;
    std::int32_t stride;
    std::int32_t delta;
};

#include "unicode_tables.inc"

template <std::size_t N>
bool in_ranges(const CpRange (&table)[N], char32_t cp) {
    auto it = std::upper_bound(std::begin(table), std::end(table), cp,
                               [](char32_t c, const CpRange& r) { return c < r.lo; });
    if (it == std::begin(table)) return false;
    --it;
    return cp >= it->lo && cp <= it->hi;
}

}  // namespace

char32_t decode_one(std::string_view s, std::size_t& i) {
    const auto* p = reinterpret_cast<const unsigned char*>(s.data());
    const std::size_t n = s.size();
    unsigned char b0 = p[i];

    if (b0 < 0x80) {
        ++i;
        return b0;
    }

    int len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return kReplacement;
    }

    if (i + static_cast<std::size_t>(len) > n) {
        ++i;
        return kReplacement;
    }
    for (int k = 1; k < len; ++k) {
        unsigned char b = p[i + static_cast<std::size_t>(k)];
        if ((b & 0xC0) != 0x80) {
            ++i;
            return kReplacement;
        }
        cp = (cp << 6) | (b & 0x3F);
    }

    // reject overlongs, surrogates, out-of-range
    static constexpr char32_t min_for_len[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_for_len[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        ++i;
        return kReplacement;
    }
    i += static_cast<std::size_t>(len);
    return cp;
}

std::vector<char32_t> decode(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) out.push_back(decode_one(s, i));
    return out;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = kReplacement;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::size_t codepoint_count(std::string_view s) {
    std::size_t i = 0, n = 0;
    while (i < s.size()) {
        decode_one(s, i);
        ++n;
    }
    return n;
}

bool is_letter(char32_t cp) { return in_ranges(kLetterRanges, cp); }

bool is_digit(char32_t cp) { return in_ranges(kDigitRanges, cp); }

char32_t to_lower(char32_t cp) {
    auto it = std::upper_bound(std::begin(kLowerRuns), std::end(kLowerRuns), cp,
                               [](char32_t c, const LowerRun& r) { return c < r.first; });
    if (it == std::begin(kLowerRuns)) return cp;
    --it;
    if (cp < it->first || cp > it->last) return cp;
    auto offset = static_cast<std::int64_t>(cp) - static_cast<std::int64_t>(it->first);
    if (offset % it->stride != 0) return cp;
    return static_cast<char32_t>(static_cast<std::int64_t>(cp) + it->delta);
}

std::string lower_copy(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) append_utf8(out, to_lower(decode_one(s, i)));
    return out;
}

}  // namespace spamzero::uni
