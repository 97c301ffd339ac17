#pragma once

// Boneh-Waters HVE converted to the 2-dimensional product group (Basis2).
//
//   Setup:    SK = (Vk = B12^v', {Uk_i, Hk_i, Wk_i} = B12^{u'_i, h'_i, w'_i}, B12^alpha)
//             PK = (B11, B12, B2, Vc = B11^v' B2^zv, {Uc_i, Hc_i, Wc_i} likewise,
//                   Omega = e(B11^v', B12)^alpha)
//   GenToken: K1 = B12^alpha prod_{i in S} (Uk_i^sigma_i Hk_i)^r1_i Wk_i^r2_i,
//             K2_i = Vk^-r1_i, K3_i = Vk^-r2_i
//   Encrypt:  C1 = Vc^t B2^z1, C2_i = (Uc_i^x_i Hc_i)^t B2^z2_i, C3_i = Wc_i^t B2^z3_i
//   Query:    D = e(C1,K1) prod_{i in S} e(C2_i,K2_i) e(C3_i,K3_i) = Omega^t on a match.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hve/pattern.hpp"
#include "hve/payload.hpp"
#include "hve/product_group.hpp"

namespace hve::bw {

inline constexpr std::size_t kDim = 2;

struct PublicKey {
    std::size_t ell = 0;
    GroupVector b11, b12, b2;
    GroupVector vc;
    std::vector<GroupVector> uc, hc, wc;
    TargetElement omega;

    friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct SecretKey {
    std::size_t ell = 0;
    GroupVector vk;
    std::vector<GroupVector> uk, hk, wk;
    GroupVector alpha_elem;  // B12^alpha

    friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

struct KeyPair {
    PublicKey pk;
    SecretKey sk;
};

struct TokenSlot {
    std::size_t index = 0;
    GroupVector k2, k3;

    friend bool operator==(const TokenSlot&, const TokenSlot&) = default;
};

struct Token {
    Pattern pattern;
    GroupVector k1;
    std::vector<TokenSlot> slots;  // one per Fixed index, ascending

    friend bool operator==(const Token&, const Token&) = default;
};

struct Ciphertext {
    Payload c0;
    GroupVector c1;
    std::vector<GroupVector> c2, c3;

    friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

/// Random exponents exposed to tests only (HVE_TEST_HOOKS builds).
struct SetupTrace {
    Scalar v_prime, alpha;
};
struct EncryptTrace {
    Scalar t;
};

/// Keys returned by setup are already prepared.
KeyPair setup(std::size_t ell, Rng& rng);
/// Enables fixed-base tables on key elements (useful for decoded keys used
/// for many operations).
void prepare(PublicKey& pk);
void prepare(SecretKey& sk);
Token gen_token(const Pattern& pattern, const SecretKey& sk, Rng& rng);
Ciphertext encrypt(const AttributeVector& x, std::span<const std::uint8_t> payload,
                   const PublicKey& pk, Rng& rng);
/// C0 = Omega^t * message.
Ciphertext encrypt_literal(const AttributeVector& x, const TargetElement& message,
                           const PublicKey& pk, Rng& rng);

/// The pairing product D of Query.
TargetElement pairing_product(const Ciphertext& ct, const Token& tk);
/// Payload on a match, nullopt when the predicate is not satisfied.
std::optional<std::vector<std::uint8_t>> query(const Ciphertext& ct, const Token& tk,
                                               const PublicKey& pk);
/// C0 * D^-1 for a literal-mode ciphertext.
TargetElement query_literal(const Ciphertext& ct, const Token& tk, const PublicKey& pk);

#ifdef HVE_TEST_HOOKS
KeyPair setup(std::size_t ell, Rng& rng, SetupTrace& trace);
Ciphertext encrypt(const AttributeVector& x, std::span<const std::uint8_t> payload,
                   const PublicKey& pk, Rng& rng, EncryptTrace& trace);
#endif

}  // namespace hve::bw
