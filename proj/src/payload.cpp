#include "hve/payload.hpp"

#include <sodium.h>

#include <algorithm>

#include "hve/errors.hpp"
#include "hve/rng.hpp"

namespace hve {

namespace {

constexpr char kAttrDomain[] = "HVE1/attribute";
constexpr char kMaskKey[] = "HVE1/payload-mask";

std::vector<std::uint8_t> derive_mask(const TargetElement& source, std::size_t len) {
    ensure_sodium();
    const auto enc = source.to_bytes();
    std::vector<std::uint8_t> out(len);
    std::uint32_t counter = 0;
    for (std::size_t off = 0; off < len; off += crypto_generichash_BYTES_MAX, ++counter) {
        std::uint8_t block[crypto_generichash_BYTES_MAX];
        const std::uint8_t ctr[4] = {static_cast<std::uint8_t>(counter >> 24),
                                     static_cast<std::uint8_t>(counter >> 16),
                                     static_cast<std::uint8_t>(counter >> 8),
                                     static_cast<std::uint8_t>(counter)};
        crypto_generichash_state st;
        crypto_generichash_init(&st, reinterpret_cast<const unsigned char*>(kMaskKey),
                                sizeof(kMaskKey) - 1, sizeof(block));
        crypto_generichash_update(&st, ctr, sizeof(ctr));
        crypto_generichash_update(&st, enc.data(), enc.size());
        crypto_generichash_final(&st, block, sizeof(block));
        const std::size_t n = std::min(len - off, sizeof(block));
        std::copy_n(block, n, out.begin() + static_cast<std::ptrdiff_t>(off));
        sodium_memzero(block, sizeof(block));
    }
    return out;
}

}  // namespace

Scalar hash_attribute(std::span<const std::uint8_t> s) {
    if (s.empty()) throw EncodingError("attribute must be nonempty");
    ensure_sodium();
    std::uint8_t digest[crypto_hash_sha512_BYTES];
    crypto_hash_sha512_state st;
    crypto_hash_sha512_init(&st);
    crypto_hash_sha512_update(&st, reinterpret_cast<const unsigned char*>(kAttrDomain),
                              sizeof(kAttrDomain));
    crypto_hash_sha512_update(&st, s.data(), s.size());
    crypto_hash_sha512_final(&st, digest);
    return Scalar::from_bytes_reduce(digest);
}

Scalar hash_attribute(std::string_view s) {
    return hash_attribute(
        std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

PayloadBlock encode_payload(std::span<const std::uint8_t> payload, const TargetElement& mask_source,
                            std::size_t max_len) {
    if (payload.size() > max_len)
        throw PayloadError("payload of " + std::to_string(payload.size()) + " bytes exceeds " +
                           std::to_string(max_len));
    PayloadBlock block;
    block.bytes.assign(payload.begin(), payload.end());
    block.bytes.resize(payload.size() + kTagBytes, 0);
    const auto mask = derive_mask(mask_source, block.bytes.size());
    for (std::size_t i = 0; i < block.bytes.size(); ++i) block.bytes[i] ^= mask[i];
    return block;
}

std::optional<std::vector<std::uint8_t>> decode_payload(const PayloadBlock& block,
                                                        const TargetElement& mask_source) {
    if (block.bytes.size() < kTagBytes) return std::nullopt;
    const auto mask = derive_mask(mask_source, block.bytes.size());
    std::vector<std::uint8_t> plain(block.bytes.size());
    for (std::size_t i = 0; i < plain.size(); ++i) plain[i] = block.bytes[i] ^ mask[i];
    const std::size_t body = plain.size() - kTagBytes;
    std::uint8_t acc = 0;
    for (std::size_t i = body; i < plain.size(); ++i) acc |= plain[i];
    if (acc != 0) {
        sodium_memzero(plain.data(), plain.size());
        return std::nullopt;
    }
    plain.resize(body);
    return plain;
}

}  // namespace hve
