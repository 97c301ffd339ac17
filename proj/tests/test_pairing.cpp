#include <doctest.h>

#include "hve/pairing.hpp"
#include "support.hpp"

using namespace hve;
using test::from_mpz;
using test::to_mpz;

TEST_CASE("generator is deterministic and consistent") {
    CHECK(generator() == generator());
    CHECK(generator().is_consistent());
    CHECK(exp(generator(), Scalar()).is_identity());
    CHECK(exp(generator(), Scalar::from_u64(1)) == generator());
}

TEST_CASE("scalar arithmetic agrees with GMP") {
    auto rng = Rng::from_seed(1);
    const mpz_class& r = test::order();
    for (int n = 0; n < 50; ++n) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng);
        const mpz_class ma = to_mpz(a), mb = to_mpz(b);
        CHECK(ma < r);
        CHECK(to_mpz(a * b) == mpz_class((ma * mb) % r));
        CHECK(to_mpz(a + b) == mpz_class((ma + mb) % r));
        CHECK(to_mpz(a - b) == mpz_class(((ma - mb) % r + r) % r));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::from_u64(1));
    }
    CHECK(Scalar::from_i64(-1) + Scalar::from_u64(1) == Scalar());
    CHECK(Scalar::from_bytes_reduce(Scalar::modulus()).is_zero());
    CHECK_FALSE(Scalar::from_canonical(Scalar::modulus()).has_value());
}

TEST_CASE("exp and mul follow exponent arithmetic") {
    auto rng = Rng::from_seed(2);
    const PairedElement g = generator();
    for (int n = 0; n < 10; ++n) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng);
        const Scalar ab = from_mpz(to_mpz(a) * to_mpz(b));
        const Scalar sum = from_mpz(to_mpz(a) + to_mpz(b));
        const PairedElement x = exp(exp(g, a), b);
        CHECK(x == exp(g, ab));
        CHECK(x.is_consistent());
        CHECK(mul(exp(g, a), exp(g, b)) == exp(g, sum));
        CHECK(mul(x, inverse(x)).is_identity());
    }
    CHECK(mul(g, PairedElement::identity()) == g);
}

TEST_CASE("an inconsistent pair is detected") {
    auto rng = Rng::from_seed(3);
    const PairedElement a = exp(generator(), random_scalar(rng));
    const PairedElement b = exp(generator(), random_scalar(rng));
    auto bytes = a.to_bytes();
    const auto rb = b.to_bytes();
    std::copy(rb.begin() + PairedElement::kLeftBytes, rb.end(), bytes.begin() + PairedElement::kLeftBytes);
    const auto mixed = PairedElement::from_bytes(bytes);
    REQUIRE(mixed.has_value());
    CHECK_FALSE(mixed->is_consistent());
    std::vector<PairedElement> batch = {a, b, *mixed};
    CHECK_FALSE(batch_consistent(batch, rng));
    batch.pop_back();
    CHECK(batch_consistent(batch, rng));
}

TEST_CASE("multi_exp equals the product of single exponentiations") {
    auto rng = Rng::from_seed(4);
    for (std::size_t k : {1u, 2u, 3u, 7u, 40u}) {
        std::vector<PairedElement> bases;
        std::vector<Scalar> exps;
        PairedElement want;
        for (std::size_t n = 0; n < k; ++n) {
            bases.push_back(exp(generator(), random_scalar(rng)));
            exps.push_back(random_scalar(rng));
            want = mul(want, exp(bases.back(), exps.back()));
        }
        bases.push_back(PairedElement::identity());
        exps.push_back(random_scalar(rng));
        CHECK(multi_exp(bases, exps) == want);
    }
}

TEST_CASE("pairing is bilinear, symmetric and non-degenerate") {
    auto rng = Rng::from_seed(5);
    const PairedElement g = generator();
    const TargetElement egg = pair(g, g);
    CHECK_FALSE(egg.is_identity());
    CHECK(pair(PairedElement::identity(), g).is_identity());
    for (int n = 0; n < 100; ++n) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng);
        const PairedElement x = exp(g, a), y = exp(g, b);
        const TargetElement p = pair(x, y);
        CHECK(p == pair(y, x));
        CHECK(p == target_exp(egg, from_mpz(to_mpz(a) * to_mpz(b))));
    }
    CHECK(target_exp(egg, Scalar()).is_identity());
    CHECK(target_mul(egg, target_inverse(egg)).is_identity());
}

TEST_CASE("target exponentiation agrees with repeated multiplication") {
    const TargetElement egg = pair(generator(), generator());
    TargetElement acc;
    for (std::uint64_t k = 0; k < 40; ++k) {
        CHECK(target_exp(egg, Scalar::from_u64(k)) == acc);
        acc = target_mul(acc, egg);
    }
    CHECK(target_exp(egg, Scalar::from_i64(-1)) == target_inverse(egg));
}

TEST_CASE("encodings round-trip and reject junk") {
    auto rng = Rng::from_seed(6);
    const PairedElement x = exp(generator(), random_scalar(rng));
    const auto bytes = x.to_bytes();
    CHECK(PairedElement::from_bytes(bytes) == x);
    CHECK(PairedElement::from_bytes(PairedElement::identity().to_bytes()) == PairedElement::identity());
    CHECK_FALSE(PairedElement::from_bytes(std::span(bytes).first(100)).has_value());

    const TargetElement t = target_exp(pair(generator(), generator()), random_scalar(rng));
    auto tb = t.to_bytes();
    CHECK(TargetElement::from_bytes(tb) == t);
    tb[300] ^= 1;
    CHECK_FALSE(TargetElement::from_bytes(tb).has_value());

    const Scalar s = random_scalar(rng);
    CHECK(Scalar::from_canonical(s.to_bytes()) == s);
}

TEST_CASE("seeded scalars are reproducible") {
    auto r1 = Rng::from_seed(99), r2 = Rng::from_seed(99);
    for (int n = 0; n < 5; ++n) CHECK(random_scalar(r1) == random_scalar(r2));
}

TEST_CASE("prepared bases give the same results as plain ones") {
    auto rng = Rng::from_seed(31);
    const PairedElement g = exp(generator(), random_scalar(rng));
    PairedElement prepared = g;
    prepared.prepare();
    const PairedElement copy = prepared;  // shares the table once it exists

    const mpz_class& r = test::order();
    std::vector<Scalar> edge = {Scalar(), Scalar::from_u64(1), Scalar::from_u64(2), Scalar::from_u64(15),
                                Scalar::from_u64(16), Scalar::from_u64(17), Scalar::from_u64(31),
                                from_mpz(r - 1), from_mpz(r - 16), from_mpz(mpz_class(1) << 255),
                                from_mpz((mpz_class(1) << 254) - 1), from_mpz(r >> 1)};
    for (int k = 0; k < 20; ++k) edge.push_back(random_scalar(rng));
    // Enough uses that the table is built part-way through the loop.
    for (const auto& s : edge) {
        const PairedElement ref = exp(g, s);
        CHECK(exp(prepared, s) == ref);
        CHECK(exp(copy, s) == ref);
        CHECK(exp(prepared, s).is_consistent());
    }
    CHECK(exp(prepared, Scalar()).is_identity());
    CHECK(inverse(prepared) == inverse(g));

    // Mixed multi-exponentiation: prepared, plain, identity and zero exponents.
    const PairedElement h = exp(generator(), random_scalar(rng));
    const std::vector<PairedElement> bases = {prepared, h, PairedElement::identity(), copy};
    const std::vector<Scalar> exps = {random_scalar(rng), random_scalar(rng), random_scalar(rng), Scalar()};
    const PairedElement expected = mul(exp(g, exps[0]), exp(h, exps[1]));
    CHECK(multi_exp(bases, exps) == expected);

    PairedElement id = PairedElement::identity();
    id.prepare();
    CHECK(exp(id, random_scalar(rng)).is_identity());
}
