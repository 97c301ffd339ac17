#pragma once

// Accumulates (base, exponent) pairs for one vec_multi_exp call. Exponents are
// secret randomness and are wiped with the list.

#include <vector>

#include "hve/product_group.hpp"

namespace hve::detail {

class TermList {
  public:
    TermList() = default;
    TermList(const TermList&) = delete;
    TermList& operator=(const TermList&) = delete;
    ~TermList() {
        for (auto& e : exps_) e.wipe();
    }

    TermList& add(const GroupVector& base, const Scalar& exponent) {
        bases_.push_back(&base);
        exps_.push_back(exponent);
        return *this;
    }

    /// Appends base^y for a fresh y drawn from rng.
    TermList& blind(const GroupVector& base, Rng& rng) { return add(base, random_scalar(rng)); }

    GroupVector eval() const {
        std::vector<VecTerm> terms;
        terms.reserve(bases_.size());
        for (std::size_t k = 0; k < bases_.size(); ++k) terms.push_back(VecTerm{*bases_[k], exps_[k]});
        return vec_multi_exp(terms);
    }

  private:
    std::vector<const GroupVector*> bases_;
    std::vector<Scalar> exps_;
};

}  // namespace hve::detail
