#pragma once

// Fixed-base exponentiation with signed 5-bit windows: window i stores
// j * 2^(5i) * P for j = 1..16, so base^s costs one mixed addition per
// nonzero digit and no doublings. Tables are built lazily and shared.
// Lookups are not constant-time.

#include <blst.h>

#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

namespace hve::detail {

class FixedBaseCache {
  public:
    FixedBaseCache(const blst_p1& left, const blst_p2& right) : left_(left), right_(right) {}

    /// Writes base^s and returns true once the table exists.
    bool try_exp(const blst_scalar& s, blst_p1& left, blst_p2& right);

  private:
    static constexpr unsigned kBuildAfter = 6;

    struct Table {
        std::vector<blst_p1_affine> g1;
        std::vector<blst_p2_affine> g2;
    };

    const Table* table();

    blst_p1 left_;
    blst_p2 right_;
    std::atomic<unsigned> uses_{0};
    std::atomic<bool> ready_{false};
    std::mutex build_mutex_;
    std::unique_ptr<Table> table_;
};

}  // namespace hve::detail
