#pragma once

// Shi-Waters delegatable HVE over the 3-dimensional basis. Keys and
// ciphertexts are shared with LL (basis3_scheme.hpp).
//
// Token for pattern sigma with fixed set S and delegatable set S?:
//   K1 = B12^alpha Wk1^r1 Wk2^r2 prod_{i in S} (Uk_i^sigma_i Hk_i)^r3_i B3^y1
//   K2 = Vk^-r1 B3^y2,  K3 = Vk^-r2 B3^y3,  K4_i = Vk^-r3_i B3^y4_i
// and for each j in S? a delegation row
//   L1u_j = Uk_j^s3_jj B3^y
//   L1h_j = Wk1^s1_j Wk2^s2_j prod_{i in S} (Uk_i^sigma_i Hk_i)^s3_ji Hk_j^s3_jj B3^y
//   L2_j = Vk^-s1_j B3^y,  L3_j = Vk^-s2_j B3^y,  L4_ji = Vk^-s3_ji B3^y (i in S + {j})
// Every B3^y carries a fresh y.
//
// Fixing slot k to v folds row k into the decryption part with a fresh mu
// and each remaining row j picks up a tau_j-multiple of row k:
//   K1' = K1 (L1u_k^v L1h_k)^mu,  K2' = K2 L2_k^mu,  K3' = K3 L3_k^mu,
//   K4_k' = L4_kk^mu,  K4_i' = K4_i L4_ki^mu
//   L1u_j' = L1u_j^mu,  L1h_j' = L1h_j^mu (L1u_k^v L1h_k)^tau_j,
//   L2_j' = L2_j^mu L2_k^tau_j,  L3_j' = L3_j^mu L3_k^tau_j,
//   L4_jj' = L4_jj^mu,  L4_jk' = L4_kk^tau_j,  L4_ji' = L4_ji^mu L4_ki^tau_j
// (each also re-blinded by B3^y). Fixing to * just drops row k.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hve/basis3_scheme.hpp"

namespace hve::sw {

using basis3::Ciphertext;
using basis3::EncryptTrace;
using basis3::KeyPair;
using basis3::prepare;
using basis3::PublicKey;
using basis3::SecretKey;
using basis3::SetupTrace;
inline constexpr std::size_t kDim = basis3::kDim;

struct IndexedVector {
    std::size_t index = 0;
    GroupVector value;

    friend bool operator==(const IndexedVector&, const IndexedVector&) = default;
};

struct DelegationRow {
    std::size_t j = 0;
    GroupVector l1u, l1h, l2, l3;
    std::vector<IndexedVector> l4;  // indexes S + {j}, ascending

    friend bool operator==(const DelegationRow&, const DelegationRow&) = default;
};

struct Token {
    Pattern pattern;
    GroupVector k1, k2, k3;
    std::vector<IndexedVector> k4;    // one per Fixed index, ascending
    std::vector<DelegationRow> rows;  // one per Deleg index, ascending

    friend bool operator==(const Token&, const Token&) = default;
};

KeyPair setup(std::size_t ell, Rng& rng);
Token gen_token(const Pattern& pattern, const SecretKey& sk, Rng& rng);

/// new_pattern must differ from tk.pattern in exactly one Deleg slot, which
/// becomes Wild or Fixed; anything else throws DelegationError.
Token delegate(const Pattern& new_pattern, const Token& tk, const PublicKey& pk, Rng& rng);

Ciphertext encrypt(const AttributeVector& x, std::span<const std::uint8_t> payload,
                   const PublicKey& pk, Rng& rng);
Ciphertext encrypt_literal(const AttributeVector& x, const TargetElement& message,
                           const PublicKey& pk, Rng& rng);

/// Deleg slots impose no constraint here.
TargetElement pairing_product(const Ciphertext& ct, const Token& tk);
std::optional<std::vector<std::uint8_t>> query(const Ciphertext& ct, const Token& tk,
                                               const PublicKey& pk);
TargetElement query_literal(const Ciphertext& ct, const Token& tk, const PublicKey& pk);

/// Structural check: components present exactly for S and S?.
bool well_formed(const Token& tk);

#ifdef HVE_TEST_HOOKS
KeyPair setup(std::size_t ell, Rng& rng, SetupTrace& trace);
Ciphertext encrypt(const AttributeVector& x, std::span<const std::uint8_t> payload,
                   const PublicKey& pk, Rng& rng, EncryptTrace& trace);
#endif

}  // namespace hve::sw
