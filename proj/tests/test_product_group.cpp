#include <doctest.h>

#include "hve/errors.hpp"
#include "hve/product_group.hpp"
#include "support.hpp"

using namespace hve;
using test::from_mpz;
using test::to_mpz;

namespace {

ExpVector random_vec(std::size_t n, Rng& rng) {
    ExpVector v;
    for (std::size_t i = 0; i < n; ++i) v.coords.push_back(random_scalar(rng));
    return v;
}

// Inner product computed with GMP, independently of the library's field code.
Scalar dot_oracle(const ExpVector& a, const ExpVector& b) {
    mpz_class acc = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += to_mpz(a.coords[i]) * to_mpz(b.coords[i]);
    return from_mpz(acc);
}

ExpVector small(std::initializer_list<std::uint64_t> xs) {
    ExpVector v;
    for (auto x : xs) v.coords.push_back(Scalar::from_u64(x));
    return v;
}

}  // namespace

TEST_CASE("vec_exp_of is componentwise") {
    auto rng = Rng::from_seed(10);
    const GroupVector z = vec_exp_of(small({0, 0}));
    CHECK(z == GroupVector::identity(2));
    const GroupVector e = vec_exp_of(small({1, 0}));
    CHECK(e[0] == generator());
    CHECK(e[1].is_identity());
    const ExpVector b = random_vec(3, rng);
    const GroupVector v = vec_exp_of(b);
    for (std::size_t i = 0; i < 3; ++i) CHECK(v[i] == exp(generator(), b.coords[i]));
}

TEST_CASE("vec_scale and vec_mul follow exponent vectors") {
    auto rng = Rng::from_seed(11);
    const ExpVector a = random_vec(2, rng), b = random_vec(2, rng);
    const GroupVector va = vec_exp_of(a);
    CHECK(vec_scale(va, Scalar::from_u64(1)) == va);
    CHECK(vec_scale(va, Scalar()) == GroupVector::identity(2));
    CHECK(vec_mul(va, vec_exp_of(b)) == vec_exp_of(add(a, b)));
    CHECK(vec_mul(va, vec_exp_of(b)) == vec_mul(vec_exp_of(b), va));
    const GroupVector vc = vec_exp_of(random_vec(2, rng));
    CHECK(vec_mul(vec_mul(va, vec_exp_of(b)), vc) == vec_mul(va, vec_mul(vec_exp_of(b), vc)));
    CHECK_THROWS_AS(vec_mul(va, vec_exp_of(random_vec(3, rng))), DimensionError);
}

TEST_CASE("vec_multi_exp matches scale-and-multiply") {
    auto rng = Rng::from_seed(12);
    const GroupVector a = vec_exp_of(random_vec(3, rng)), b = vec_exp_of(random_vec(3, rng));
    const Scalar s = random_scalar(rng), t = random_scalar(rng);
    CHECK(vec_multi_exp({{a, s}, {b, t}}) == vec_mul(vec_scale(a, s), vec_scale(b, t)));
}

TEST_CASE("vec_pair is the inner-product pairing") {
    auto rng = Rng::from_seed(13);
    const TargetElement egg = pair(generator(), generator());
    CHECK(vec_pair(vec_exp_of(small({1, 0})), vec_exp_of(small({0, 1}))).is_identity());
    CHECK(vec_pair(vec_exp_of(small({1, 2})), vec_exp_of(small({3, 4}))) ==
          target_exp(egg, Scalar::from_u64(11)));
    for (std::size_t n : {2u, 3u}) {
        for (int k = 0; k < 100; ++k) {
            const ExpVector a = random_vec(n, rng), b = random_vec(n, rng);
            const GroupVector va = vec_exp_of(a), vb = vec_exp_of(b);
            const TargetElement p = vec_pair(va, vb);
            CHECK(p == target_exp(egg, dot_oracle(a, b)));
            if (k < 5) CHECK(p == vec_pair(vb, va));
        }
    }
    CHECK_THROWS_AS(vec_pair(GroupVector::identity(2), GroupVector::identity(3)), DimensionError);
    CHECK_THROWS_AS(is_orthogonal(GroupVector::identity(2), GroupVector::identity(3)), DimensionError);
}

TEST_CASE("Basis2 relations") {
    auto rng = Rng::from_seed(14);
    const TargetElement egg = pair(generator(), generator());
    for (int k = 0; k < 5; ++k) {
        const Basis2 b = gen_basis_2(rng);
        CHECK(is_orthogonal(b.b2, b.b12));
        CHECK_FALSE(is_orthogonal(b.b11, b.b2));
        CHECK(vec_pair(b.b11, b.b12) == egg);
        CHECK(b.b11 == vec_exp_of(b.exp_b11()));
        CHECK(dot(b.exp_b2(), b.exp_b12()).is_zero());
    }
}

TEST_CASE("Basis3 relations") {
    auto rng = Rng::from_seed(15);
    const TargetElement egg = pair(generator(), generator());
    for (int k = 0; k < 5; ++k) {
        const Basis3 b = gen_basis_3(rng);
        CHECK(is_orthogonal(b.b11, b.b3));
        CHECK(is_orthogonal(b.b12, b.b2));
        CHECK(is_orthogonal(b.b2, b.b3));
        CHECK_FALSE(is_orthogonal(b.b11, b.b12));
        CHECK(vec_pair(b.b11, b.b12) == egg);
        CHECK(dot_oracle(b.exp_b2(), b.exp_b3()).is_zero());
    }
}

TEST_CASE("generated bases are reproducible from the seed") {
    auto r1 = Rng::from_seed(16), r2 = Rng::from_seed(16);
    CHECK(gen_basis_3(r1).b2 == gen_basis_3(r2).b2);
}
