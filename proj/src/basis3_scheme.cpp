#include "hve/basis3_scheme.hpp"

#include "scheme_util.hpp"

namespace hve::basis3 {

namespace {

Ciphertext encrypt_common(const AttributeVector& x, const PublicKey& pk, Rng& rng, Scalar& t_out) {
    detail::require_length(x.size(), pk.ell, "attribute vector");
    const SecretScalar t(random_scalar(rng));
    const SecretScalar z1(random_scalar(rng)), z2(random_scalar(rng)), z3(random_scalar(rng));

    Ciphertext ct;
    ct.c1 = vec_multi_exp({{pk.vc, t.get()}, {pk.b2, z1.get()}});
    ct.c2 = vec_multi_exp({{pk.wc1, t.get()}, {pk.b2, z2.get()}});
    ct.c3 = vec_multi_exp({{pk.wc2, t.get()}, {pk.b2, z3.get()}});
    for (std::size_t i = 0; i < pk.ell; ++i) {
        const SecretScalar z4(random_scalar(rng));
        const Scalar xt = x[i] * t.get();
        ct.c4.push_back(vec_multi_exp({{pk.uc[i], xt}, {pk.hc[i], t.get()}, {pk.b2, z4.get()}}));
    }
    t_out = t.get();
    return ct;
}

}  // namespace

KeyPair setup(std::size_t ell, Rng& rng, SetupTrace* trace) {
    detail::require_ell(ell);
    const Basis3 basis = gen_basis_3(rng);

    const SecretScalar v(random_scalar(rng)), w1(random_scalar(rng)), w2(random_scalar(rng));
    const SecretScalar alpha(random_scalar(rng));
    const SecretScalar zv(random_scalar(rng)), zw1(random_scalar(rng)), zw2(random_scalar(rng));

    KeyPair kp;
    PublicKey& pk = kp.pk;
    SecretKey& sk = kp.sk;
    pk.ell = sk.ell = ell;
    pk.b11 = basis.b11;
    pk.b12 = basis.b12;
    pk.b2 = basis.b2;
    pk.b3 = basis.b3;
    sk.b3 = basis.b3;

    sk.vk = vec_scale(basis.b12, v.get());
    sk.wk1 = vec_scale(basis.b12, w1.get());
    sk.wk2 = vec_scale(basis.b12, w2.get());
    pk.vc = vec_multi_exp({{basis.b11, v.get()}, {basis.b2, zv.get()}});
    pk.wc1 = vec_multi_exp({{basis.b11, w1.get()}, {basis.b2, zw1.get()}});
    pk.wc2 = vec_multi_exp({{basis.b11, w2.get()}, {basis.b2, zw2.get()}});
    for (std::size_t i = 0; i < ell; ++i) {
        const SecretScalar u(random_scalar(rng)), h(random_scalar(rng));
        const SecretScalar zu(random_scalar(rng)), zh(random_scalar(rng));
        sk.uk.push_back(vec_scale(basis.b12, u.get()));
        sk.hk.push_back(vec_scale(basis.b12, h.get()));
        pk.uc.push_back(vec_multi_exp({{basis.b11, u.get()}, {basis.b2, zu.get()}}));
        pk.hc.push_back(vec_multi_exp({{basis.b11, h.get()}, {basis.b2, zh.get()}}));
    }
    sk.alpha_elem = vec_scale(basis.b12, alpha.get());
    pk.omega = target_exp(vec_pair(vec_scale(basis.b11, v.get()), basis.b12), alpha.get());

    if (trace != nullptr) {
        trace->v_prime = v.get();
        trace->alpha = alpha.get();
    }
    prepare(pk);
    prepare(sk);
    return kp;
}

void prepare(PublicKey& pk) {
    for (auto* v : {&pk.b11, &pk.b12, &pk.b2, &pk.b3, &pk.vc, &pk.wc1, &pk.wc2}) v->prepare();
    for (auto* vs : {&pk.uc, &pk.hc})
        for (auto& v : *vs) v.prepare();
}

void prepare(SecretKey& sk) {
    for (auto* v : {&sk.vk, &sk.wk1, &sk.wk2, &sk.alpha_elem, &sk.b3}) v->prepare();
    for (auto* vs : {&sk.uk, &sk.hk})
        for (auto& v : *vs) v.prepare();
}

Ciphertext encrypt(const AttributeVector& x, std::span<const std::uint8_t> payload,
                   const PublicKey& pk, Rng& rng, EncryptTrace* trace) {
    if (payload.size() > kDefaultMaxPayload)
        throw PayloadError("payload exceeds " + std::to_string(kDefaultMaxPayload) + " bytes");
    Scalar t;
    Ciphertext ct = encrypt_common(x, pk, rng, t);
    ct.c0 = detail::make_payload_block(payload, target_exp(pk.omega, t));
    if (trace != nullptr) trace->t = t;
    t.wipe();
    return ct;
}

Ciphertext encrypt_literal(const AttributeVector& x, const TargetElement& message,
                           const PublicKey& pk, Rng& rng) {
    Scalar t;
    Ciphertext ct = encrypt_common(x, pk, rng, t);
    ct.c0 = target_mul(target_exp(pk.omega, t), message);
    t.wipe();
    return ct;
}

}  // namespace hve::basis3
