#pragma once

// Prime-order bilinear group with symmetric-pairing behaviour, realised on
// BLS12-381. A source-group element is carried as a synchronized pair
// (G1gen^x, G2gen^x); pair(x, y) = e(x.left, y.right), which equals
// e(g,g)^(x*y) and is therefore symmetric in its arguments.

#include <blst.h>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hve/rng.hpp"

namespace hve {

/// Integer modulo the BLS12-381 group order r.
class Scalar {
  public:
    static constexpr std::size_t kBytes = 32;

    Scalar();  // zero

    static Scalar from_u64(std::uint64_t v);
    static Scalar from_i64(std::int64_t v);
    /// Big-endian bytes of any length, reduced modulo r.
    static Scalar from_bytes_reduce(std::span<const std::uint8_t> be);
    /// Exactly 32 big-endian bytes encoding a value < r; nullopt otherwise.
    static std::optional<Scalar> from_canonical(std::span<const std::uint8_t> be);

    std::array<std::uint8_t, kBytes> to_bytes() const;  // big-endian, canonical
    std::string to_hex() const;

    bool is_zero() const;
    Scalar inverse() const;  // inverse of zero is zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Big-endian group order r.
    static const std::array<std::uint8_t, kBytes>& modulus();

    const blst_fr& raw() const { return value_; }

    /// Overwrites the value with zero (callers holding secrets use this on drop).
    void wipe();

    /// Little-endian scalar as consumed by blst's point multiplication.
    blst_scalar to_blst_scalar() const;

  private:
    blst_fr value_;
};

Scalar random_scalar(Rng& rng);

namespace detail {
class FixedBaseCache;
}

class PairedElement {
  public:
    static constexpr std::size_t kLeftBytes = 48;
    static constexpr std::size_t kRightBytes = 96;
    static constexpr std::size_t kBytes = kLeftBytes + kRightBytes;

    PairedElement();  // identity

    static PairedElement generator();
    static PairedElement identity();

    bool is_identity() const;
    /// pair(left, G2gen) == pair(G1gen, right)
    bool is_consistent() const;

    /// Compressed left ∥ compressed right.
    std::array<std::uint8_t, kBytes> to_bytes() const;
    /// Subgroup-checked decode of both halves; consistency is not checked here.
    static std::optional<PairedElement> from_bytes(std::span<const std::uint8_t> bytes);

    const blst_p1& left() const { return left_; }
    const blst_p2& right() const { return right_; }

    /// Marks a long-lived base such as key material. Once it has been used a
    /// few times a fixed-base table is built and shared by all copies.
    void prepare();

    friend bool operator==(const PairedElement& a, const PairedElement& b);

    friend PairedElement exp(const PairedElement& base, const Scalar& s);
    friend PairedElement mul(const PairedElement& x, const PairedElement& y);
    friend PairedElement inverse(const PairedElement& x);
    friend PairedElement multi_exp(std::span<const PairedElement> bases,
                                   std::span<const Scalar> exps);

  private:
    blst_p1 left_;
    blst_p2 right_;
    std::shared_ptr<detail::FixedBaseCache> cache_;
};

PairedElement generator();
PairedElement exp(const PairedElement& base, const Scalar& s);
PairedElement mul(const PairedElement& x, const PairedElement& y);
PairedElement inverse(const PairedElement& x);
/// prod_k bases[k]^exps[k] (simultaneous multi-exponentiation).
PairedElement multi_exp(std::span<const PairedElement> bases, std::span<const Scalar> exps);

/// Checks dlog-consistency of a batch with one random linear combination:
/// e(sum r_k left_k, G2gen) == e(G1gen, sum r_k right_k) for 128-bit r_k.
bool batch_consistent(std::span<const PairedElement> elems, Rng& rng);

/// Element of the order-r subgroup of F_p^12.
class TargetElement {
  public:
    static constexpr std::size_t kBytes = 48 * 12;

    TargetElement();  // identity

    static TargetElement identity();

    bool is_identity() const;

    std::array<std::uint8_t, kBytes> to_bytes() const;
    /// Rejects non-canonical field encodings and elements outside the subgroup.
    static std::optional<TargetElement> from_bytes(std::span<const std::uint8_t> bytes);

    friend bool operator==(const TargetElement& a, const TargetElement& b);

    friend TargetElement target_mul(const TargetElement& a, const TargetElement& b);
    friend TargetElement target_exp(const TargetElement& a, const Scalar& s);
    friend TargetElement target_inverse(const TargetElement& a);

  private:
    friend class PairingProduct;
    blst_fp12 value_;
};

TargetElement target_mul(const TargetElement& a, const TargetElement& b);
TargetElement target_exp(const TargetElement& a, const Scalar& s);
TargetElement target_inverse(const TargetElement& a);

/// Product of pairings sharing one final exponentiation.
class PairingProduct {
  public:
    /// Multiplies in pair(x, y) = e(x.left, y.right).
    void add(const PairedElement& x, const PairedElement& y);
    TargetElement finish() const;
    std::size_t size() const { return lefts_.size(); }

  private:
    std::vector<blst_p1_affine> lefts_;
    std::vector<blst_p2_affine> rights_;
};

/// e(x.left, y.right)
TargetElement pair(const PairedElement& x, const PairedElement& y);

#ifdef HVE_TEST_HOOKS
namespace instrumentation {

/// Per-thread operation counters; only present in test-hook builds.
struct Counters {
    std::uint64_t base_pairings = 0;
    std::uint64_t final_exps = 0;
    std::uint64_t vec_pairs = 0;
};

Counters& counters();
void reset_counters();

}  // namespace instrumentation
#endif

}  // namespace hve
