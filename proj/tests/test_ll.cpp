#include <doctest.h>

#include "hve/errors.hpp"
#include "hve/ll.hpp"
#include "support.hpp"

using namespace hve;

TEST_CASE("ll setup relations") {
    auto rng = Rng::from_seed(40);
    ll::SetupTrace st;
    const auto kp = ll::setup(2, rng, st);
    CHECK(is_orthogonal(kp.pk.b11, kp.pk.b3));
    CHECK(is_orthogonal(kp.pk.b12, kp.pk.b2));
    CHECK(is_orthogonal(kp.pk.b2, kp.pk.b3));
    CHECK(kp.pk.omega == target_exp(pair(generator(), generator()), st.v_prime * st.alpha));
}

TEST_CASE("ll tokens have four components") {
    auto rng = Rng::from_seed(41);
    const auto kp = ll::setup(8, rng);
    const auto x = test::random_attrs(8, rng);
    const auto tk = ll::gen_token(Pattern::exact(x), kp.sk, rng);
    for (const auto* c : {&tk.k1, &tk.k2, &tk.k3, &tk.k4}) {
        CHECK(c->dim() == 3);
        CHECK(is_orthogonal(*c, kp.pk.b2));
    }
    CHECK_THROWS_AS(ll::gen_token(Pattern(std::vector<Slot>(8, Slot::deleg())), kp.sk, rng), ParameterError);
}

TEST_CASE("ll correctness, rejection and telescoping") {
    auto rng = Rng::from_seed(42);
    for (std::size_t ell : {1u, 6u}) {
        const auto kp = ll::setup(ell, rng);
        for (int k = 0; k < 6; ++k) {
            const auto x = test::random_attrs(ell, rng);
            const auto msg = test::random_bytes(48, rng);
            ll::EncryptTrace et;
            const auto ct = ll::encrypt(x, msg, kp.pk, rng, et);
            const auto good = ll::gen_token(test::matching_pattern(x, rng), kp.sk, rng);
            CHECK(ll::pairing_product(ct, good) == target_exp(kp.pk.omega, et.t));
            CHECK(ll::query(ct, good, kp.pk) == msg);
            CHECK_FALSE(ll::query(ct, ll::gen_token(test::mismatching_pattern(x, rng), kp.sk, rng), kp.pk));
        }
    }
}

TEST_CASE("ll query pairs four times for any length") {
    auto rng = Rng::from_seed(43);
    for (std::size_t ell : {1u, 4u, 16u}) {
        const auto kp = ll::setup(ell, rng);
        const auto x = test::random_attrs(ell, rng);
        const auto ct = ll::encrypt(x, {}, kp.pk, rng);
        const auto tk = ll::gen_token(Pattern::exact(x), kp.sk, rng);
        instrumentation::reset_counters();
        CHECK(ll::query(ct, tk, kp.pk).has_value());
        CHECK(instrumentation::counters().vec_pairs == 4);
        CHECK(instrumentation::counters().final_exps == 1);
    }
}
