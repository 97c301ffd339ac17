#include "hve/sw.hpp"

#include <algorithm>

#include "scheme_util.hpp"
#include "term_list.hpp"

namespace hve::sw {

using detail::TermList;

namespace {

const Scalar& one() {
    static const Scalar v = Scalar::from_u64(1);
    return v;
}

const GroupVector* find(const std::vector<IndexedVector>& v, std::size_t index) {
    for (const auto& e : v)
        if (e.index == index) return &e.value;
    return nullptr;
}

bool indexes_equal(const std::vector<IndexedVector>& v, const std::vector<std::size_t>& want) {
    if (v.size() != want.size()) return false;
    for (std::size_t k = 0; k < want.size(); ++k)
        if (v[k].index != want[k]) return false;
    return true;
}

std::vector<std::size_t> with_index(std::vector<std::size_t> s, std::size_t j) {
    s.insert(std::upper_bound(s.begin(), s.end(), j), j);
    return s;
}

GroupVector blinded(const GroupVector& base, const Scalar& e, const GroupVector& b3, Rng& rng) {
    TermList t;
    t.add(base, e).blind(b3, rng);
    return t.eval();
}

// Validates a single-slot delegation step and returns the changed slot.
std::size_t delegated_slot(const Pattern& from, const Pattern& to) {
    if (from.size() != to.size()) throw DelegationError("pattern length changed");
    std::optional<std::size_t> changed;
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (from[i] == to[i]) continue;
        if (changed) throw DelegationError("delegation changes more than one slot");
        changed = i;
    }
    if (!changed) throw DelegationError("delegation changes no slot");
    const std::size_t k = *changed;
    if (from[k].kind != SlotKind::Deleg)
        throw DelegationError("slot " + std::to_string(k) + " is not delegatable");
    if (to[k].kind == SlotKind::Deleg) throw DelegationError("slot stays delegatable");
    return k;
}

void check_shapes(const Ciphertext& ct, const Token& tk) {
    detail::require_length(ct.c4.size(), tk.pattern.size(), "ciphertext");
    if (!well_formed(tk)) throw ParameterError("token components do not match its pattern");
}

}  // namespace

bool well_formed(const Token& tk) {
    const auto fixed = tk.pattern.fixed_indexes();
    const auto deleg = tk.pattern.deleg_indexes();
    if (!indexes_equal(tk.k4, fixed) || tk.rows.size() != deleg.size()) return false;
    for (std::size_t k = 0; k < deleg.size(); ++k) {
        if (tk.rows[k].j != deleg[k]) return false;
        if (!indexes_equal(tk.rows[k].l4, with_index(fixed, deleg[k]))) return false;
    }
    return true;
}

KeyPair setup(std::size_t ell, Rng& rng) { return basis3::setup(ell, rng, nullptr); }

Token gen_token(const Pattern& pattern, const SecretKey& sk, Rng& rng) {
    detail::require_length(pattern.size(), sk.ell, "pattern");
    const auto fixed = pattern.fixed_indexes();
    const GroupVector& b3 = sk.b3;

    Token tk;
    tk.pattern = pattern;

    // Decryption part.
    {
        const SecretScalar r1(random_scalar(rng)), r2(random_scalar(rng));
        std::vector<SecretScalar> r3;
        for (std::size_t n = 0; n < fixed.size(); ++n) r3.emplace_back(random_scalar(rng));

        TermList k1;
        k1.add(sk.alpha_elem, one()).add(sk.wk1, r1.get()).add(sk.wk2, r2.get());
        for (std::size_t n = 0; n < fixed.size(); ++n) {
            const std::size_t i = fixed[n];
            k1.add(sk.uk[i], pattern[i].value * r3[n].get()).add(sk.hk[i], r3[n].get());
        }
        tk.k1 = k1.blind(b3, rng).eval();
        tk.k2 = blinded(sk.vk, -r1.get(), b3, rng);
        tk.k3 = blinded(sk.vk, -r2.get(), b3, rng);
        for (std::size_t n = 0; n < fixed.size(); ++n)
            tk.k4.push_back({fixed[n], blinded(sk.vk, -r3[n].get(), b3, rng)});
    }

    // Delegation rows.
    for (std::size_t j : pattern.deleg_indexes()) {
        const SecretScalar s1(random_scalar(rng)), s2(random_scalar(rng));
        const SecretScalar s3jj(random_scalar(rng));
        std::vector<SecretScalar> s3;
        for (std::size_t n = 0; n < fixed.size(); ++n) s3.emplace_back(random_scalar(rng));

        DelegationRow row;
        row.j = j;
        row.l1u = blinded(sk.uk[j], s3jj.get(), b3, rng);

        TermList l1h;
        l1h.add(sk.wk1, s1.get()).add(sk.wk2, s2.get());
        for (std::size_t n = 0; n < fixed.size(); ++n) {
            const std::size_t i = fixed[n];
            l1h.add(sk.uk[i], pattern[i].value * s3[n].get()).add(sk.hk[i], s3[n].get());
        }
        l1h.add(sk.hk[j], s3jj.get());
        row.l1h = l1h.blind(b3, rng).eval();
        row.l2 = blinded(sk.vk, -s1.get(), b3, rng);
        row.l3 = blinded(sk.vk, -s2.get(), b3, rng);

        std::size_t n = 0;
        for (std::size_t i : with_index(fixed, j)) {
            const Scalar& s = i == j ? s3jj.get() : s3[n++].get();
            row.l4.push_back({i, blinded(sk.vk, -s, b3, rng)});
        }
        tk.rows.push_back(std::move(row));
    }
    return tk;
}

Token delegate(const Pattern& new_pattern, const Token& tk, const PublicKey& pk, Rng& rng) {
    if (!well_formed(tk)) throw DelegationError("token components do not match its pattern");
    if (tk.pattern.size() != pk.ell) throw DelegationError("token and public key lengths differ");
    const std::size_t k = delegated_slot(tk.pattern, new_pattern);
    const auto row_k = std::find_if(tk.rows.begin(), tk.rows.end(),
                                    [k](const DelegationRow& r) { return r.j == k; });
    const GroupVector& b3 = pk.b3;

    Token out;
    out.pattern = new_pattern;

    if (new_pattern[k].kind == SlotKind::Wild) {
        out.k1 = tk.k1;
        out.k2 = tk.k2;
        out.k3 = tk.k3;
        out.k4 = tk.k4;
        for (const auto& r : tk.rows)
            if (r.j != k) out.rows.push_back(r);
        return out;
    }

    const Scalar& v = new_pattern[k].value;
    const SecretScalar mu(random_scalar(rng));
    const Scalar v_mu = v * mu.get();
    const auto new_fixed = new_pattern.fixed_indexes();

    {
        TermList k1;
        k1.add(tk.k1, one()).add(row_k->l1u, v_mu).add(row_k->l1h, mu.get());
        out.k1 = k1.blind(b3, rng).eval();
    }
    {
        TermList k2;
        k2.add(tk.k2, one()).add(row_k->l2, mu.get());
        out.k2 = k2.blind(b3, rng).eval();
        TermList k3;
        k3.add(tk.k3, one()).add(row_k->l3, mu.get());
        out.k3 = k3.blind(b3, rng).eval();
    }
    for (std::size_t i : new_fixed) {
        TermList k4;
        if (i != k) k4.add(*find(tk.k4, i), one());
        k4.add(*find(row_k->l4, i), mu.get());
        out.k4.push_back({i, k4.blind(b3, rng).eval()});
    }

    for (const auto& row : tk.rows) {
        if (row.j == k) continue;
        const SecretScalar tau(random_scalar(rng));
        const Scalar v_tau = v * tau.get();

        DelegationRow r;
        r.j = row.j;
        r.l1u = blinded(row.l1u, mu.get(), b3, rng);
        {
            TermList l1h;
            l1h.add(row.l1h, mu.get()).add(row_k->l1u, v_tau).add(row_k->l1h, tau.get());
            r.l1h = l1h.blind(b3, rng).eval();
        }
        {
            TermList l2;
            l2.add(row.l2, mu.get()).add(row_k->l2, tau.get());
            r.l2 = l2.blind(b3, rng).eval();
            TermList l3;
            l3.add(row.l3, mu.get()).add(row_k->l3, tau.get());
            r.l3 = l3.blind(b3, rng).eval();
        }
        for (std::size_t i : with_index(new_fixed, row.j)) {
            TermList l4;
            if (i == row.j) {
                l4.add(*find(row.l4, i), mu.get());
            } else if (i == k) {
                l4.add(*find(row_k->l4, k), tau.get());
            } else {
                l4.add(*find(row.l4, i), mu.get()).add(*find(row_k->l4, i), tau.get());
            }
            r.l4.push_back({i, l4.blind(b3, rng).eval()});
        }
        out.rows.push_back(std::move(r));
    }
    return out;
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
    VecPairProduct prod;
    prod.add(ct.c1, tk.k1).add(ct.c2, tk.k2).add(ct.c3, tk.k3);
    for (const auto& k4 : tk.k4) prod.add(ct.c4[k4.index], k4.value);
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

}  // namespace hve::sw
