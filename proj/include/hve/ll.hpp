#pragma once

// Lee-Lee HVE over the 3-dimensional basis: one r3 shared by every fixed
// index, so a token has four components and Query four product-group
// pairings regardless of the vector length.
//
//   K1 = B12^alpha Wk1^r1 Wk2^r2 prod_{i in S} (Uk_i^sigma_i Hk_i)^r3 B3^y1
//   K2 = Vk^-r1 B3^y2,  K3 = Vk^-r2 B3^y3,  K4 = Vk^-r3 B3^y4
//   D  = e(C1,K1) e(C2,K2) e(C3,K3) e(prod_{i in S} C4_i, K4)
//
// A mismatch leaves Omega^t times e(g,g)^(r3 t sum_{i in S} u'_i (sigma_i - x_i)),
// so x chosen with that sum = 0 would be accepted; for honestly random keys it
// happens with negligible probability.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hve/basis3_scheme.hpp"

namespace hve::ll {

using basis3::Ciphertext;
using basis3::EncryptTrace;
using basis3::KeyPair;
using basis3::prepare;
using basis3::PublicKey;
using basis3::SecretKey;
using basis3::SetupTrace;
inline constexpr std::size_t kDim = basis3::kDim;

struct Token {
    Pattern pattern;
    GroupVector k1, k2, k3, k4;

    friend bool operator==(const Token&, const Token&) = default;
};

KeyPair setup(std::size_t ell, Rng& rng);
Token gen_token(const Pattern& pattern, const SecretKey& sk, Rng& rng);
Ciphertext encrypt(const AttributeVector& x, std::span<const std::uint8_t> payload,
                   const PublicKey& pk, Rng& rng);
Ciphertext encrypt_literal(const AttributeVector& x, const TargetElement& message,
                           const PublicKey& pk, Rng& rng);

TargetElement pairing_product(const Ciphertext& ct, const Token& tk);
std::optional<std::vector<std::uint8_t>> query(const Ciphertext& ct, const Token& tk,
                                               const PublicKey& pk);
TargetElement query_literal(const Ciphertext& ct, const Token& tk, const PublicKey& pk);

#ifdef HVE_TEST_HOOKS
KeyPair setup(std::size_t ell, Rng& rng, SetupTrace& trace);
Ciphertext encrypt(const AttributeVector& x, std::span<const std::uint8_t> payload,
                   const PublicKey& pk, Rng& rng, EncryptTrace& trace);
#endif

}  // namespace hve::ll
