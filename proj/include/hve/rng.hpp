#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace hve {

/// Deterministic ChaCha20 keystream used as the single randomness source of
/// every key, token and ciphertext. Not thread-safe; hold one per thread.
class Rng {
  public:
    static constexpr std::size_t kKeyBytes = 32;

    /// Seed of any length; it is hashed into the stream key.
    static Rng from_seed(std::span<const std::uint8_t> seed);
    static Rng from_seed(std::uint64_t seed);
    /// Keyed from the operating system entropy source.
    static Rng from_os();

    Rng(const Rng&) = delete;
    Rng& operator=(const Rng&) = delete;
    Rng(Rng&&) noexcept;
    Rng& operator=(Rng&&) noexcept;
    ~Rng();

    void fill(std::span<std::uint8_t> out);
    std::uint64_t next_u64();
    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t uniform(std::uint64_t bound);

  private:
    explicit Rng(const std::array<std::uint8_t, kKeyBytes>& key);
    void refill();

    std::array<std::uint8_t, kKeyBytes> key_{};
    std::uint64_t block_ = 0;
    std::array<std::uint8_t, 64> buffer_{};
    std::size_t used_ = 64;
};

/// libsodium must be initialised before use; safe to call repeatedly.
void ensure_sodium();

}  // namespace hve
