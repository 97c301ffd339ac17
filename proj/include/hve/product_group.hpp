#pragma once

// Bilinear product groups G^n (n = 2, 3): componentwise group law, the
// inner-product pairing e(g^a, g^b) = e(g,g)^(a.b), orthogonality, and the
// fixed bases of the converted HVE schemes.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hve/pairing.hpp"
#include "hve/rng.hpp"

namespace hve {

/// Scalar held as secret material; wiped when destroyed.
class SecretScalar {
  public:
    SecretScalar() = default;
    explicit SecretScalar(const Scalar& s) : value_(s) {}
    SecretScalar(const SecretScalar&) = default;
    SecretScalar& operator=(const SecretScalar&) = default;
    ~SecretScalar() { value_.wipe(); }

    const Scalar& get() const { return value_; }

  private:
    Scalar value_;
};

/// Exponent vector in Z_p^n.
struct ExpVector {
    std::vector<Scalar> coords;

    std::size_t dim() const { return coords.size(); }
};

Scalar dot(const ExpVector& a, const ExpVector& b);
ExpVector add(const ExpVector& a, const ExpVector& b);
ExpVector scale(const ExpVector& a, const Scalar& c);

/// Element g^b of G^n.
class GroupVector {
  public:
    GroupVector() = default;
    explicit GroupVector(std::vector<PairedElement> elems) : elems_(std::move(elems)) {}

    static GroupVector identity(std::size_t n);

    std::size_t dim() const { return elems_.size(); }
    const PairedElement& operator[](std::size_t i) const { return elems_[i]; }
    std::span<const PairedElement> elems() const { return elems_; }

    /// See PairedElement::prepare.
    void prepare() {
        for (auto& e : elems_) e.prepare();
    }

    friend bool operator==(const GroupVector& a, const GroupVector& b) = default;

  private:
    std::vector<PairedElement> elems_;
};

GroupVector vec_exp_of(const ExpVector& b);
GroupVector vec_scale(const GroupVector& v, const Scalar& c);
GroupVector vec_mul(const GroupVector& v, const GroupVector& w);
GroupVector vec_inverse(const GroupVector& v);

struct VecTerm {
    const GroupVector& base;
    const Scalar& exponent;
};

/// prod_k base_k ^ exponent_k; all bases share one dimension.
GroupVector vec_multi_exp(std::span<const VecTerm> terms);
GroupVector vec_multi_exp(std::initializer_list<VecTerm> terms);

/// prod_i pair(V_i, W_i)
TargetElement vec_pair(const GroupVector& v, const GroupVector& w);

/// Product of several vec_pair values with a single final exponentiation.
/// Each add() is one product-group pairing invocation.
class VecPairProduct {
  public:
    VecPairProduct& add(const GroupVector& v, const GroupVector& w);
    TargetElement finish() const { return product_.finish(); }

  private:
    PairingProduct product_;
};

bool is_orthogonal(const GroupVector& v, const GroupVector& w);

/// b11 = (1,0), b12 = (1,a), b2 = (a,-1).
struct Basis2 {
    SecretScalar a;
    GroupVector b11, b12, b2;

    ExpVector exp_b11() const;
    ExpVector exp_b12() const;
    ExpVector exp_b2() const;
};

/// b11 = (1,0,a1), b12 = (1,a2,0), b2 = (a2,-1,a1*a2-a3), b3 = (a1,a3,-1).
struct Basis3 {
    SecretScalar a1, a2, a3;
    GroupVector b11, b12, b2, b3;

    ExpVector exp_b11() const;
    ExpVector exp_b12() const;
    ExpVector exp_b2() const;
    ExpVector exp_b3() const;
};

Basis2 gen_basis_2(Rng& rng);
Basis3 gen_basis_3(Rng& rng);

}  // namespace hve
