#include "hve/rng.hpp"

#include <sodium.h>

#include <cstring>
#include <stdexcept>

namespace hve {

namespace {
constexpr char kSeedDomain[] = "HVE1/rng-seed";
}

void ensure_sodium() {
    static const bool ok = sodium_init() >= 0;
    if (!ok) throw std::runtime_error("libsodium initialisation failed");
}

Rng::Rng(const std::array<std::uint8_t, kKeyBytes>& key) : key_(key) {}

Rng::Rng(Rng&& other) noexcept
    : key_(other.key_), block_(other.block_), buffer_(other.buffer_), used_(other.used_) {
    sodium_memzero(other.key_.data(), other.key_.size());
    other.used_ = other.buffer_.size();
}

Rng& Rng::operator=(Rng&& other) noexcept {
    if (this != &other) {
        key_ = other.key_;
        block_ = other.block_;
        buffer_ = other.buffer_;
        used_ = other.used_;
        sodium_memzero(other.key_.data(), other.key_.size());
        other.used_ = other.buffer_.size();
    }
    return *this;
}

Rng::~Rng() {
    sodium_memzero(key_.data(), key_.size());
    sodium_memzero(buffer_.data(), buffer_.size());
}

Rng Rng::from_seed(std::span<const std::uint8_t> seed) {
    ensure_sodium();
    std::array<std::uint8_t, kKeyBytes> key{};
    crypto_generichash_state st;
    crypto_generichash_init(&st, nullptr, 0, key.size());
    crypto_generichash_update(&st, reinterpret_cast<const unsigned char*>(kSeedDomain),
                              sizeof(kSeedDomain));
    crypto_generichash_update(&st, seed.data(), seed.size());
    crypto_generichash_final(&st, key.data(), key.size());
    return Rng(key);
}

Rng Rng::from_seed(std::uint64_t seed) {
    std::array<std::uint8_t, 8> bytes{};
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
    return from_seed(bytes);
}

Rng Rng::from_os() {
    ensure_sodium();
    std::array<std::uint8_t, kKeyBytes> key{};
    randombytes_buf(key.data(), key.size());
    return Rng(key);
}

void Rng::refill() {
    static constexpr std::array<std::uint8_t, crypto_stream_chacha20_NONCEBYTES> nonce{};
    std::memset(buffer_.data(), 0, buffer_.size());
    crypto_stream_chacha20_xor_ic(buffer_.data(), buffer_.data(), buffer_.size(), nonce.data(),
                                  block_++, key_.data());
    used_ = 0;
}

void Rng::fill(std::span<std::uint8_t> out) {
    std::size_t off = 0;
    while (off < out.size()) {
        if (used_ == buffer_.size()) refill();
        const std::size_t n = std::min(out.size() - off, buffer_.size() - used_);
        std::memcpy(out.data() + off, buffer_.data() + used_, n);
        used_ += n;
        off += n;
    }
}

std::uint64_t Rng::next_u64() {
    std::array<std::uint8_t, 8> b{};
    fill(b);
    std::uint64_t v = 0;
    for (auto x : b) v = (v << 8) | x;
    return v;
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        const std::uint64_t v = next_u64();
        if (v < limit) return v % bound;
    }
}

}  // namespace hve
