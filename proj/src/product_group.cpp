#include "hve/product_group.hpp"

#include <string>

#include "hve/errors.hpp"

namespace hve {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
    if (a != b)
        throw DimensionError(std::string(op) + ": dimension " + std::to_string(a) + " vs " +
                             std::to_string(b));
}

}  // namespace

Scalar dot(const ExpVector& a, const ExpVector& b) {
    require_same_dim(a.dim(), b.dim(), "dot");
    Scalar acc;
    for (std::size_t i = 0; i < a.dim(); ++i) acc = acc + a.coords[i] * b.coords[i];
    return acc;
}

ExpVector add(const ExpVector& a, const ExpVector& b) {
    require_same_dim(a.dim(), b.dim(), "add");
    ExpVector out;
    for (std::size_t i = 0; i < a.dim(); ++i) out.coords.push_back(a.coords[i] + b.coords[i]);
    return out;
}

ExpVector scale(const ExpVector& a, const Scalar& c) {
    ExpVector out;
    for (const auto& x : a.coords) out.coords.push_back(x * c);
    return out;
}

GroupVector GroupVector::identity(std::size_t n) {
    return GroupVector(std::vector<PairedElement>(n, PairedElement::identity()));
}

GroupVector vec_exp_of(const ExpVector& b) {
    const PairedElement g = generator();
    std::vector<PairedElement> out;
    out.reserve(b.dim());
    for (const auto& x : b.coords) out.push_back(exp(g, x));
    return GroupVector(std::move(out));
}

GroupVector vec_scale(const GroupVector& v, const Scalar& c) {
    std::vector<PairedElement> out;
    out.reserve(v.dim());
    for (const auto& e : v.elems()) out.push_back(exp(e, c));
    return GroupVector(std::move(out));
}

GroupVector vec_mul(const GroupVector& v, const GroupVector& w) {
    require_same_dim(v.dim(), w.dim(), "vec_mul");
    std::vector<PairedElement> out;
    out.reserve(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(mul(v[i], w[i]));
    return GroupVector(std::move(out));
}

GroupVector vec_inverse(const GroupVector& v) {
    std::vector<PairedElement> out;
    out.reserve(v.dim());
    for (const auto& e : v.elems()) out.push_back(inverse(e));
    return GroupVector(std::move(out));
}

GroupVector vec_multi_exp(std::span<const VecTerm> terms) {
    if (terms.empty()) throw DimensionError("vec_multi_exp: no terms");
    const std::size_t n = terms.front().base.dim();
    std::vector<PairedElement> bases(terms.size());
    std::vector<Scalar> exps(terms.size());
    std::vector<PairedElement> out;
    out.reserve(n);
    for (const auto& t : terms) require_same_dim(n, t.base.dim(), "vec_multi_exp");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < terms.size(); ++k) {
            bases[k] = terms[k].base[i];
            exps[k] = terms[k].exponent;
        }
        out.push_back(multi_exp(bases, exps));
    }
    return GroupVector(std::move(out));
}

GroupVector vec_multi_exp(std::initializer_list<VecTerm> terms) {
    return vec_multi_exp(std::span<const VecTerm>(terms.begin(), terms.size()));
}

VecPairProduct& VecPairProduct::add(const GroupVector& v, const GroupVector& w) {
    require_same_dim(v.dim(), w.dim(), "vec_pair");
#ifdef HVE_TEST_HOOKS
    ++instrumentation::counters().vec_pairs;
#endif
    for (std::size_t i = 0; i < v.dim(); ++i) product_.add(v[i], w[i]);
    return *this;
}

TargetElement vec_pair(const GroupVector& v, const GroupVector& w) {
    return VecPairProduct().add(v, w).finish();
}

bool is_orthogonal(const GroupVector& v, const GroupVector& w) {
    return vec_pair(v, w).is_identity();
}

ExpVector Basis2::exp_b11() const { return {{Scalar::from_u64(1), Scalar()}}; }
ExpVector Basis2::exp_b12() const { return {{Scalar::from_u64(1), a.get()}}; }
ExpVector Basis2::exp_b2() const { return {{a.get(), -Scalar::from_u64(1)}}; }

ExpVector Basis3::exp_b11() const { return {{Scalar::from_u64(1), Scalar(), a1.get()}}; }
ExpVector Basis3::exp_b12() const { return {{Scalar::from_u64(1), a2.get(), Scalar()}}; }
ExpVector Basis3::exp_b2() const {
    return {{a2.get(), -Scalar::from_u64(1), a1.get() * a2.get() - a3.get()}};
}
ExpVector Basis3::exp_b3() const { return {{a1.get(), a3.get(), -Scalar::from_u64(1)}}; }

Basis2 gen_basis_2(Rng& rng) {
    Basis2 b;
    b.a = SecretScalar(random_scalar(rng));
    b.b11 = vec_exp_of(b.exp_b11());
    b.b12 = vec_exp_of(b.exp_b12());
    b.b2 = vec_exp_of(b.exp_b2());
    return b;
}

Basis3 gen_basis_3(Rng& rng) {
    Basis3 b;
    b.a1 = SecretScalar(random_scalar(rng));
    b.a2 = SecretScalar(random_scalar(rng));
    b.a3 = SecretScalar(random_scalar(rng));
    b.b11 = vec_exp_of(b.exp_b11());
    b.b12 = vec_exp_of(b.exp_b12());
    b.b2 = vec_exp_of(b.exp_b2());
    b.b3 = vec_exp_of(b.exp_b3());
    return b;
}

}  // namespace hve
