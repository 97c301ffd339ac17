#include <doctest.h>

#include "hve/bw.hpp"
#include "hve/errors.hpp"
#include "support.hpp"

using namespace hve;

namespace {

const TargetElement& egg() {
    static const TargetElement v = pair(generator(), generator());
    return v;
}

}  // namespace

TEST_CASE("bw setup") {
    auto rng = Rng::from_seed(20);
    bw::SetupTrace trace;
    const auto kp = bw::setup(3, rng, trace);
    CHECK(kp.pk.ell == 3);
    CHECK(kp.pk.uc.size() == 3);
    CHECK(is_orthogonal(kp.sk.vk, kp.pk.b2));
    CHECK(kp.pk.omega == target_exp(egg(), trace.v_prime * trace.alpha));
    CHECK_THROWS_AS(bw::setup(0, rng), ParameterError);

    auto r1 = Rng::from_seed(21), r2 = Rng::from_seed(21);
    const auto a = bw::setup(2, r1), b = bw::setup(2, r2);
    CHECK(a.pk == b.pk);
    CHECK(a.sk == b.sk);
}

TEST_CASE("bw token shape") {
    auto rng = Rng::from_seed(22);
    const auto kp = bw::setup(4, rng);
    const Pattern wild(std::vector<Slot>(4, Slot::wild()));
    const auto tw = bw::gen_token(wild, kp.sk, rng);
    CHECK(tw.slots.empty());
    CHECK(tw.k1 == kp.sk.alpha_elem);

    const Pattern p({Slot::fixed(Scalar::from_u64(5)), Slot::wild(), Slot::fixed(Scalar::from_u64(6)), Slot::wild()});
    const auto tk = bw::gen_token(p, kp.sk, rng);
    REQUIRE(tk.slots.size() == 2);
    CHECK(tk.slots[0].index == 0);
    CHECK(tk.slots[1].index == 2);

    // Blinding in span(B2) is annihilated by every token component.
    const GroupVector blind = vec_scale(kp.pk.b2, random_scalar(rng));
    CHECK(is_orthogonal(blind, tk.k1));
    for (const auto& s : tk.slots) {
        CHECK(is_orthogonal(blind, s.k2));
        CHECK(is_orthogonal(blind, s.k3));
    }

    CHECK_THROWS_AS(bw::gen_token(Pattern(std::vector<Slot>(3, Slot::wild())), kp.sk, rng), ParameterError);
    CHECK_THROWS_AS(bw::gen_token(Pattern({Slot::deleg(), Slot::wild(), Slot::wild(), Slot::wild()}), kp.sk, rng),
                    ParameterError);
}

TEST_CASE("bw correctness and rejection") {
    auto rng = Rng::from_seed(23);
    for (std::size_t ell : {1u, 3u, 5u}) {
        const auto kp = bw::setup(ell, rng);
        for (int k = 0; k < 6; ++k) {
            const auto x = test::random_attrs(ell, rng);
            const auto msg = test::random_bytes(64, rng);
            const auto ct = bw::encrypt(x, msg, kp.pk, rng);
            const auto good = bw::gen_token(test::matching_pattern(x, rng), kp.sk, rng);
            CHECK(bw::query(ct, good, kp.pk) == msg);
            const auto bad = bw::gen_token(test::mismatching_pattern(x, rng), kp.sk, rng);
            CHECK_FALSE(bw::query(ct, bad, kp.pk).has_value());
        }
    }
}

TEST_CASE("bw telescoping") {
    auto rng = Rng::from_seed(24);
    bw::SetupTrace st;
    const auto kp = bw::setup(4, rng, st);
    for (int k = 0; k < 5; ++k) {
        const auto x = test::random_attrs(4, rng);
        bw::EncryptTrace et;
        const auto ct = bw::encrypt(x, {}, kp.pk, rng, et);
        const auto tk = bw::gen_token(test::matching_pattern(x, rng), kp.sk, rng);
        CHECK(bw::pairing_product(ct, tk) == target_exp(kp.pk.omega, et.t));
        CHECK(bw::pairing_product(ct, tk) == target_exp(egg(), st.v_prime * st.alpha * et.t));
    }
}

TEST_CASE("bw literal mode and payload limits") {
    auto rng = Rng::from_seed(25);
    const auto kp = bw::setup(2, rng);
    const auto x = test::random_attrs(2, rng);
    const TargetElement m = target_exp(egg(), random_scalar(rng));
    const auto ct = bw::encrypt_literal(x, m, kp.pk, rng);
    const auto tk = bw::gen_token(Pattern::exact(x), kp.sk, rng);
    CHECK(bw::query_literal(ct, tk, kp.pk) == m);
    CHECK_THROWS_AS(bw::query(ct, tk, kp.pk), ParameterError);

    const std::vector<std::uint8_t> big(kDefaultMaxPayload + 1, 7);
    CHECK_THROWS_AS(bw::encrypt(x, big, kp.pk, rng), PayloadError);
    CHECK_THROWS_AS(bw::encrypt(test::random_attrs(3, rng), {}, kp.pk, rng), ParameterError);

    const std::vector<std::uint8_t> full(kDefaultMaxPayload, 9);
    CHECK(bw::query(bw::encrypt(x, full, kp.pk, rng), tk, kp.pk) == full);
}

TEST_CASE("bw encryption is reproducible from the seed") {
    auto rng = Rng::from_seed(26);
    const auto kp = bw::setup(2, rng);
    const auto x = test::random_attrs(2, rng);
    auto r1 = Rng::from_seed(27), r2 = Rng::from_seed(27);
    CHECK(bw::encrypt(x, {}, kp.pk, r1) == bw::encrypt(x, {}, kp.pk, r2));
}
