#pragma once

// Attribute hashing and the payload block carried in C0.
//
// Payload mode: block = KDF(encode(mask_source)) XOR (payload || 0^128). A
// query that did not recover mask_source sees a nonzero tag except with
// probability 2^-128, which is how "predicate not satisfied" is detected.
// Literal mode keeps C0 = Omega^t * M with M in G_T.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "hve/pairing.hpp"

namespace hve {

inline constexpr std::size_t kTagBytes = 16;
inline constexpr std::size_t kDefaultMaxPayload = 256;

/// Domain-separated SHA-512 of s reduced mod r. Throws EncodingError on empty input.
Scalar hash_attribute(std::span<const std::uint8_t> s);
Scalar hash_attribute(std::string_view s);

struct PayloadBlock {
    std::vector<std::uint8_t> bytes;  // masked payload || tag

    friend bool operator==(const PayloadBlock&, const PayloadBlock&) = default;
};

/// C0: masked payload block, or the literal Omega^t * M.
using Payload = std::variant<PayloadBlock, TargetElement>;

/// Throws PayloadError when payload exceeds max_len.
PayloadBlock encode_payload(std::span<const std::uint8_t> payload, const TargetElement& mask_source,
                            std::size_t max_len = kDefaultMaxPayload);

/// nullopt signals a tag failure (predicate not satisfied).
std::optional<std::vector<std::uint8_t>> decode_payload(const PayloadBlock& block,
                                                        const TargetElement& mask_source);

}  // namespace hve
