#include "hve/bw.hpp"

#include "scheme_util.hpp"

namespace hve::bw {

namespace {

KeyPair setup_impl(std::size_t ell, Rng& rng, SetupTrace* trace) {
    detail::require_ell(ell);
    const Basis2 basis = gen_basis_2(rng);

    const SecretScalar v(random_scalar(rng));
    const SecretScalar alpha(random_scalar(rng));
    const SecretScalar zv(random_scalar(rng));

    KeyPair kp;
    PublicKey& pk = kp.pk;
    SecretKey& sk = kp.sk;
    pk.ell = sk.ell = ell;
    pk.b11 = basis.b11;
    pk.b12 = basis.b12;
    pk.b2 = basis.b2;

    sk.vk = vec_scale(basis.b12, v.get());
    pk.vc = vec_multi_exp({{basis.b11, v.get()}, {basis.b2, zv.get()}});
    for (std::size_t i = 0; i < ell; ++i) {
        const SecretScalar u(random_scalar(rng)), h(random_scalar(rng)), w(random_scalar(rng));
        const SecretScalar zu(random_scalar(rng)), zh(random_scalar(rng)), zw(random_scalar(rng));
        sk.uk.push_back(vec_scale(basis.b12, u.get()));
        sk.hk.push_back(vec_scale(basis.b12, h.get()));
        sk.wk.push_back(vec_scale(basis.b12, w.get()));
        pk.uc.push_back(vec_multi_exp({{basis.b11, u.get()}, {basis.b2, zu.get()}}));
        pk.hc.push_back(vec_multi_exp({{basis.b11, h.get()}, {basis.b2, zh.get()}}));
        pk.wc.push_back(vec_multi_exp({{basis.b11, w.get()}, {basis.b2, zw.get()}}));
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

Ciphertext encrypt_common(const AttributeVector& x, const PublicKey& pk, Rng& rng, Scalar& t_out) {
    detail::require_length(x.size(), pk.ell, "attribute vector");
    const SecretScalar t(random_scalar(rng));
    const SecretScalar z1(random_scalar(rng));

    Ciphertext ct;
    ct.c1 = vec_multi_exp({{pk.vc, t.get()}, {pk.b2, z1.get()}});
    for (std::size_t i = 0; i < pk.ell; ++i) {
        const SecretScalar z2(random_scalar(rng)), z3(random_scalar(rng));
        const Scalar xt = x[i] * t.get();
        // (Uc_i^x_i Hc_i)^t B2^z2 evaluated as one multi-exponentiation
        ct.c2.push_back(vec_multi_exp({{pk.uc[i], xt}, {pk.hc[i], t.get()}, {pk.b2, z2.get()}}));
        ct.c3.push_back(vec_multi_exp({{pk.wc[i], t.get()}, {pk.b2, z3.get()}}));
    }
    t_out = t.get();
    return ct;
}

Ciphertext encrypt_impl(const AttributeVector& x, std::span<const std::uint8_t> payload,
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

void check_shapes(const Ciphertext& ct, const Token& tk) {
    const std::size_t ell = tk.pattern.size();
    detail::require_length(ct.c2.size(), ell, "ciphertext");
    detail::require_length(ct.c3.size(), ell, "ciphertext");
    const auto fixed = tk.pattern.fixed_indexes();
    bool ok = tk.slots.size() == fixed.size();
    for (std::size_t k = 0; ok && k < fixed.size(); ++k) ok = tk.slots[k].index == fixed[k];
    if (!ok) throw ParameterError("token components do not match its pattern");
}

}  // namespace

KeyPair setup(std::size_t ell, Rng& rng) { return setup_impl(ell, rng, nullptr); }

void prepare(PublicKey& pk) {
    for (auto* v : {&pk.b11, &pk.b12, &pk.b2, &pk.vc}) v->prepare();
    for (auto* vs : {&pk.uc, &pk.hc, &pk.wc})
        for (auto& v : *vs) v.prepare();
}

void prepare(SecretKey& sk) {
    for (auto* v : {&sk.vk, &sk.alpha_elem}) v->prepare();
    for (auto* vs : {&sk.uk, &sk.hk, &sk.wk})
        for (auto& v : *vs) v.prepare();
}

Token gen_token(const Pattern& pattern, const SecretKey& sk, Rng& rng) {
    detail::require_length(pattern.size(), sk.ell, "pattern");
    detail::require_no_deleg(pattern);

    Token tk;
    tk.pattern = pattern;
    tk.k1 = sk.alpha_elem;
    for (std::size_t i : pattern.fixed_indexes()) {
        const SecretScalar r1(random_scalar(rng)), r2(random_scalar(rng));
        const Scalar sr = pattern[i].value * r1.get();
        tk.k1 = vec_mul(tk.k1, vec_multi_exp({{sk.uk[i], sr}, {sk.hk[i], r1.get()}, {sk.wk[i], r2.get()}}));
        tk.slots.push_back({i, vec_scale(sk.vk, -r1.get()), vec_scale(sk.vk, -r2.get())});
    }
    return tk;
}

Ciphertext encrypt(const AttributeVector& x, std::span<const std::uint8_t> payload,
                   const PublicKey& pk, Rng& rng) {
    return encrypt_impl(x, payload, pk, rng, nullptr);
}

Ciphertext encrypt_literal(const AttributeVector& x, const TargetElement& message,
                           const PublicKey& pk, Rng& rng) {
    Scalar t;
    Ciphertext ct = encrypt_common(x, pk, rng, t);
    ct.c0 = target_mul(target_exp(pk.omega, t), message);
    t.wipe();
    return ct;
}

TargetElement pairing_product(const Ciphertext& ct, const Token& tk) {
    check_shapes(ct, tk);
    VecPairProduct prod;
    prod.add(ct.c1, tk.k1);
    for (const auto& slot : tk.slots) {
        prod.add(ct.c2[slot.index], slot.k2);
        prod.add(ct.c3[slot.index], slot.k3);
    }
    return prod.finish();
}

std::optional<std::vector<std::uint8_t>> query(const Ciphertext& ct, const Token& tk,
                                               const PublicKey& pk) {
    detail::require_length(tk.pattern.size(), pk.ell, "token");
    return detail::open_payload(ct.c0, pairing_product(ct, tk));
}

TargetElement query_literal(const Ciphertext& ct, const Token& tk, const PublicKey& pk) {
    detail::require_length(tk.pattern.size(), pk.ell, "token");
    return detail::open_literal(ct.c0, pairing_product(ct, tk));
}

#ifdef HVE_TEST_HOOKS
KeyPair setup(std::size_t ell, Rng& rng, SetupTrace& trace) { return setup_impl(ell, rng, &trace); }

Ciphertext encrypt(const AttributeVector& x, std::span<const std::uint8_t> payload,
                   const PublicKey& pk, Rng& rng, EncryptTrace& trace) {
    return encrypt_impl(x, payload, pk, rng, &trace);
}
#endif

}  // namespace hve::bw
