#pragma once

// Keys and ciphertexts shared by the SW and LL schemes, which use the same
// 3-dimensional basis, key material and ciphertext shape:
//
//   SK = (Vk, Wk1, Wk2, {Uk_i, Hk_i}, B12^alpha), each B12^(exponent)
//   PK = (B11, B12, B2, B3, Vc, Wc1, Wc2, {Uc_i, Hc_i}, Omega), each
//        B11^(exponent) B2^(fresh z), Omega = e(B11^v', B12)^alpha
//   CT = (C0, C1 = Vc^t B2^z1, C2 = Wc1^t B2^z2, C3 = Wc2^t B2^z3,
//         {C4_i = (Uc_i^x_i Hc_i)^t B2^z4_i})

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hve/pattern.hpp"
#include "hve/payload.hpp"
#include "hve/product_group.hpp"

namespace hve::basis3 {

inline constexpr std::size_t kDim = 3;

struct PublicKey {
    std::size_t ell = 0;
    GroupVector b11, b12, b2, b3;
    GroupVector vc, wc1, wc2;
    std::vector<GroupVector> uc, hc;
    TargetElement omega;

    friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

/// Carries a copy of the public B3 so tokens can be blinded from SK alone.
struct SecretKey {
    std::size_t ell = 0;
    GroupVector vk, wk1, wk2;
    std::vector<GroupVector> uk, hk;
    GroupVector alpha_elem;  // B12^alpha
    GroupVector b3;

    friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

struct KeyPair {
    PublicKey pk;
    SecretKey sk;
};

struct Ciphertext {
    Payload c0;
    GroupVector c1, c2, c3;
    std::vector<GroupVector> c4;

    friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

struct SetupTrace {
    Scalar v_prime, alpha;
};
struct EncryptTrace {
    Scalar t;
};

/// Returned keys are prepared (fixed-base tables enabled).
KeyPair setup(std::size_t ell, Rng& rng, SetupTrace* trace);
void prepare(PublicKey& pk);
void prepare(SecretKey& sk);
Ciphertext encrypt(const AttributeVector& x, std::span<const std::uint8_t> payload,
                   const PublicKey& pk, Rng& rng, EncryptTrace* trace);
Ciphertext encrypt_literal(const AttributeVector& x, const TargetElement& message,
                           const PublicKey& pk, Rng& rng);

}  // namespace hve::basis3
