#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace spamzero {

// 64-bit FNV-1a. Stable across platforms and runs; used for message ids
// and config digests, not for anything adversarial.
constexpr std::uint64_t kFnvBasis = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

constexpr std::uint64_t fnv1a64(std::string_view data, std::uint64_t h = kFnvBasis) {
    for (unsigned char c : data) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

std::string hex64(std::uint64_t v);

// Message identity: digest of (source, text) with a separator that cannot
// occur in either field boundary-ambiguously.
std::string message_id(std::string_view source, std::string_view text);

}  // namespace spamzero
