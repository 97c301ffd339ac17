#include <doctest.h>

#include "hve/errors.hpp"
#include "hve/sw.hpp"
#include "support.hpp"

using namespace hve;

namespace {

std::vector<GroupVector> components(const sw::Token& tk) {
    std::vector<GroupVector> out = {tk.k1, tk.k2, tk.k3};
    for (const auto& k : tk.k4) out.push_back(k.value);
    for (const auto& r : tk.rows) {
        for (const auto* v : {&r.l1u, &r.l1h, &r.l2, &r.l3}) out.push_back(*v);
        for (const auto& l : r.l4) out.push_back(l.value);
    }
    return out;
}

Pattern replace(const Pattern& p, std::size_t i, Slot s) {
    auto slots = p.slots();
    slots[i] = s;
    return Pattern(std::move(slots));
}

}  // namespace

TEST_CASE("sw setup relations") {
    auto rng = Rng::from_seed(30);
    sw::SetupTrace st;
    const auto kp = sw::setup(3, rng, st);
    CHECK(is_orthogonal(kp.pk.b2, kp.sk.vk));
    CHECK(is_orthogonal(kp.pk.vc, kp.pk.b3));
    CHECK(is_orthogonal(kp.pk.wc2, kp.pk.b3));
    CHECK(kp.pk.omega == target_exp(pair(generator(), generator()), st.v_prime * st.alpha));
    CHECK(kp.sk.b3 == kp.pk.b3);
}

TEST_CASE("sw token structure and cross-orthogonality") {
    auto rng = Rng::from_seed(31);
    const auto kp = sw::setup(4, rng);
    const Pattern p({Slot::fixed(Scalar::from_u64(1)), Slot::deleg(), Slot::wild(), Slot::deleg()});
    const auto tk = sw::gen_token(p, kp.sk, rng);
    CHECK(sw::well_formed(tk));
    REQUIRE(tk.k4.size() == 1);
    REQUIRE(tk.rows.size() == 2);
    CHECK(tk.rows[0].j == 1);
    CHECK(tk.rows[0].l4.size() == 2);

    const GroupVector b2z = vec_scale(kp.pk.b2, random_scalar(rng));
    for (const auto& c : components(tk)) CHECK(is_orthogonal(b2z, c));

    const auto x = test::random_attrs(4, rng);
    const auto ct = sw::encrypt(x, {}, kp.pk, rng);
    for (const auto* c : {&ct.c1, &ct.c2, &ct.c3}) CHECK(is_orthogonal(*c, kp.pk.b3));
    for (const auto& c : ct.c4) CHECK(is_orthogonal(c, kp.pk.b3));

    const auto plain = sw::gen_token(Pattern(std::vector<Slot>(4, Slot::wild())), kp.sk, rng);
    CHECK(plain.rows.empty());
    CHECK(plain.k4.empty());
}

TEST_CASE("sw correctness and rejection with delegatable slots") {
    auto rng = Rng::from_seed(32);
    for (std::size_t ell : {1u, 4u}) {
        const auto kp = sw::setup(ell, rng);
        for (int k = 0; k < 6; ++k) {
            const auto x = test::random_attrs(ell, rng);
            const auto msg = test::random_bytes(32, rng);
            const auto ct = sw::encrypt(x, msg, kp.pk, rng);
            CHECK(sw::query(ct, sw::gen_token(test::matching_pattern(x, rng, true), kp.sk, rng), kp.pk) == msg);
            CHECK_FALSE(sw::query(ct, sw::gen_token(test::mismatching_pattern(x, rng, true), kp.sk, rng), kp.pk));
        }
    }
}

TEST_CASE("sw telescoping") {
    auto rng = Rng::from_seed(33);
    const auto kp = sw::setup(3, rng);
    for (int k = 0; k < 4; ++k) {
        const auto x = test::random_attrs(3, rng);
        sw::EncryptTrace et;
        const auto ct = sw::encrypt(x, {}, kp.pk, rng, et);
        const auto tk = sw::gen_token(test::matching_pattern(x, rng, true), kp.sk, rng);
        CHECK(sw::pairing_product(ct, tk) == target_exp(kp.pk.omega, et.t));
    }
}

TEST_CASE("sw delegation") {
    auto rng = Rng::from_seed(34);
    const auto kp = sw::setup(3, rng);
    const auto x = test::random_attrs(3, rng);
    const auto msg = test::random_bytes(16, rng);
    const auto ct = sw::encrypt(x, msg, kp.pk, rng);
    const Pattern root({Slot::deleg(), Slot::fixed(x[1]), Slot::deleg()});
    const auto tk = sw::gen_token(root, kp.sk, rng);

    SUBCASE("to wildcard") {
        const auto d = sw::delegate(replace(root, 0, Slot::wild()), tk, kp.pk, rng);
        CHECK(sw::well_formed(d));
        CHECK(d.rows.size() == 1);
        CHECK(sw::query(ct, d, kp.pk) == msg);
    }
    SUBCASE("to the matching value, then the other slot") {
        const auto d = sw::delegate(replace(root, 0, Slot::fixed(x[0])), tk, kp.pk, rng);
        CHECK(sw::well_formed(d));
        CHECK(d.k4.size() == 2);
        CHECK(sw::query(ct, d, kp.pk) == msg);
        const auto good = sw::delegate(replace(d.pattern, 2, Slot::fixed(x[2])), d, kp.pk, rng);
        CHECK(sw::well_formed(good));
        CHECK(sw::query(ct, good, kp.pk) == msg);
        const auto bad = sw::delegate(replace(d.pattern, 2, Slot::fixed(x[2] + Scalar::from_u64(1))), d, kp.pk, rng);
        CHECK_FALSE(sw::query(ct, bad, kp.pk));
    }
    SUBCASE("to a wrong value") {
        const auto d = sw::delegate(replace(root, 2, Slot::fixed(x[2] - Scalar::from_u64(3))), tk, kp.pk, rng);
        CHECK_FALSE(sw::query(ct, d, kp.pk));
    }
    SUBCASE("unreachable patterns") {
        CHECK_THROWS_AS(sw::delegate(root, tk, kp.pk, rng), DelegationError);
        CHECK_THROWS_AS(sw::delegate(replace(root, 1, Slot::wild()), tk, kp.pk, rng), DelegationError);
        CHECK_THROWS_AS(
            sw::delegate(replace(replace(root, 0, Slot::wild()), 2, Slot::wild()), tk, kp.pk, rng),
            DelegationError);
        CHECK_THROWS_AS(sw::delegate(Pattern({Slot::wild()}), tk, kp.pk, rng), DelegationError);
    }
}

TEST_CASE("sw rejects malformed tokens") {
    auto rng = Rng::from_seed(35);
    const auto kp = sw::setup(2, rng);
    auto tk = sw::gen_token(Pattern({Slot::fixed(Scalar::from_u64(1)), Slot::deleg()}), kp.sk, rng);
    const auto ct = sw::encrypt(test::random_attrs(2, rng), {}, kp.pk, rng);
    tk.k4.clear();
    CHECK_FALSE(sw::well_formed(tk));
    CHECK_THROWS_AS(sw::query(ct, tk, kp.pk), ParameterError);
}
