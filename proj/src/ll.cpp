#include "hve/ll.hpp"

#include "scheme_util.hpp"
#include "term_list.hpp"

namespace hve::ll {

using detail::TermList;

namespace {

void check_shapes(const Ciphertext& ct, const Token& tk) {
    detail::require_length(ct.c4.size(), tk.pattern.size(), "ciphertext");
    detail::require_no_deleg(tk.pattern);
}

}  // namespace

KeyPair setup(std::size_t ell, Rng& rng) { return basis3::setup(ell, rng, nullptr); }

Token gen_token(const Pattern& pattern, const SecretKey& sk, Rng& rng) {
    detail::require_length(pattern.size(), sk.ell, "pattern");
    detail::require_no_deleg(pattern);

    const SecretScalar r1(random_scalar(rng)), r2(random_scalar(rng)), r3(random_scalar(rng));
    const Scalar one = Scalar::from_u64(1);

    Token tk;
    tk.pattern = pattern;
    {
        TermList k1;
        k1.add(sk.alpha_elem, one).add(sk.wk1, r1.get()).add(sk.wk2, r2.get());
        for (std::size_t i : pattern.fixed_indexes())
            k1.add(sk.uk[i], pattern[i].value * r3.get()).add(sk.hk[i], r3.get());
        tk.k1 = k1.blind(sk.b3, rng).eval();
    }
    Scalar neg[3] = {-r1.get(), -r2.get(), -r3.get()};
    GroupVector* outs[3] = {&tk.k2, &tk.k3, &tk.k4};
    for (int n = 0; n < 3; ++n) {
        TermList t;
        t.add(sk.vk, neg[n]).blind(sk.b3, rng);
        *outs[n] = t.eval();
    }
    return tk;
}

Ciphertext encrypt(const AttributeVector& x, std::span<const std::uint8_t> payload,
                   const PublicKey& pk, Rng& rng) {
    return basis3::encrypt(x, payload, pk, rng, nullptr);
}

Ciphertext encrypt_literal(const AttributeVector& x, const TargetElement& message,
                           const PublicKey& pk, Rng& rng) {
    return basis3::encrypt_literal(x, message, pk, rng);
}

TargetElement pairing_product(const Ciphertext& ct, const Token& tk) {
    check_shapes(ct, tk);
    GroupVector c4 = GroupVector::identity(kDim);
    for (std::size_t i : tk.pattern.fixed_indexes()) c4 = vec_mul(c4, ct.c4[i]);
    VecPairProduct prod;
    prod.add(ct.c1, tk.k1).add(ct.c2, tk.k2).add(ct.c3, tk.k3).add(c4, tk.k4);
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
KeyPair setup(std::size_t ell, Rng& rng, SetupTrace& trace) { return basis3::setup(ell, rng, &trace); }

Ciphertext encrypt(const AttributeVector& x, std::span<const std::uint8_t> payload,
                   const PublicKey& pk, Rng& rng, EncryptTrace& trace) {
    return basis3::encrypt(x, payload, pk, rng, &trace);
}
#endif

}  // namespace hve::ll
