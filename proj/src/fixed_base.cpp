#include "fixed_base.hpp"

#include <array>

namespace hve::detail {

namespace {

constexpr std::size_t kWindowBits = 5;
constexpr std::size_t kEntries = std::size_t{1} << (kWindowBits - 1);  // 16
constexpr std::size_t kWindows = 52;  // 255-bit scalars plus a final carry

// Signed digits in [-16, 16], least significant first.
std::array<int, kWindows> recode(const blst_scalar& s) {
    std::array<int, kWindows> digits{};
    unsigned carry = 0;
    for (std::size_t w = 0; w < kWindows; ++w) {
        unsigned v = 0;
        for (std::size_t b = 0; b < kWindowBits; ++b) {
            const std::size_t bit = w * kWindowBits + b;
            if (bit < 256) v |= ((s.b[bit / 8] >> (bit % 8)) & 1u) << b;
        }
        v += carry;
        if (v > kEntries) {
            digits[w] = static_cast<int>(v) - 2 * static_cast<int>(kEntries);
            carry = 1;
        } else {
            digits[w] = static_cast<int>(v);
            carry = 0;
        }
    }
    return digits;
}

template <typename Proj, typename Aff, typename Add, typename Dbl, typename ToAff>
std::vector<Aff> build_table(const Proj& p, Add add, Dbl dbl, ToAff to_affine) {
    std::vector<Proj> proj(kWindows * kEntries);
    Proj base = p;
    for (std::size_t w = 0; w < kWindows; ++w) {
        Proj* row = &proj[w * kEntries];
        row[0] = base;
        for (std::size_t j = 1; j < kEntries; ++j) add(&row[j], &row[j - 1], &base);
        dbl(&base, &row[kEntries - 1]);
    }
    std::vector<const Proj*> ptrs(proj.size());
    for (std::size_t k = 0; k < proj.size(); ++k) ptrs[k] = &proj[k];
    std::vector<Aff> out(proj.size());
    to_affine(out.data(), ptrs.data(), proj.size());
    return out;
}

}  // namespace

const FixedBaseCache::Table* FixedBaseCache::table() {
    if (ready_.load(std::memory_order_acquire)) return table_.get();
    if (uses_.fetch_add(1, std::memory_order_relaxed) + 1 < kBuildAfter) return nullptr;
    std::lock_guard<std::mutex> lock(build_mutex_);
    if (!table_) {
        auto t = std::make_unique<Table>();
        t->g1 = build_table<blst_p1, blst_p1_affine>(left_, blst_p1_add_or_double, blst_p1_double,
                                                     blst_p1s_to_affine);
        t->g2 = build_table<blst_p2, blst_p2_affine>(right_, blst_p2_add_or_double, blst_p2_double,
                                                     blst_p2s_to_affine);
        table_ = std::move(t);
        ready_.store(true, std::memory_order_release);
    }
    return table_.get();
}

bool FixedBaseCache::try_exp(const blst_scalar& s, blst_p1& left, blst_p2& right) {
    const Table* t = table();
    if (t == nullptr) return false;
    const auto digits = recode(s);
    blst_p1 l{};
    blst_p2 r{};
    for (std::size_t w = 0; w < kWindows; ++w) {
        const int d = digits[w];
        if (d == 0) continue;
        const std::size_t idx = w * kEntries + static_cast<std::size_t>(d < 0 ? -d : d) - 1;
        blst_p1_affine a = t->g1[idx];
        blst_p2_affine b = t->g2[idx];
        if (d < 0) {
            blst_fp_cneg(&a.y, &a.y, true);
            blst_fp2_cneg(&b.y, &b.y, true);
        }
        blst_p1_add_or_double_affine(&l, &l, &a);
        blst_p2_add_or_double_affine(&r, &r, &b);
    }
    left = l;
    right = r;
    return true;
}

}  // namespace hve::detail
