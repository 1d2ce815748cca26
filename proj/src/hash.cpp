#include "spamzero/hash.hpp"

namespace spamzero {

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

std::string message_id(std::string_view source, std::string_view text) {
    std::uint64_t h = fnv1a64(source);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(text, h);
    return hex64(h);
}

}  // namespace spamzero
