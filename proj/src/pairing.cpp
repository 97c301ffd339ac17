#include "hve/pairing.hpp"

#include "fixed_base.hpp"

#include <blst_aux.h>
#include <sodium.h>

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace hve {

namespace {

constexpr std::size_t kScalarBits = 255;

// r = 0x73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001
constexpr std::array<std::uint8_t, Scalar::kBytes> kGroupOrder = {
    0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8,
    0x08, 0x09, 0xa1, 0xd8, 0x05, 0x53, 0xbd, 0xa4, 0x02, 0xff, 0xfe,
    0x5b, 0xfe, 0xff, 0xff, 0xff, 0xff, 0x00, 0x00, 0x00, 0x01};

#ifdef HVE_TEST_HOOKS
thread_local instrumentation::Counters g_counters;
inline void count_pairings(std::size_t n) { g_counters.base_pairings += n; }
inline void count_final_exp() { ++g_counters.final_exps; }
#else
inline void count_pairings(std::size_t) {}
inline void count_final_exp() {}
#endif

}  // namespace

#ifdef HVE_TEST_HOOKS
namespace instrumentation {
Counters& counters() { return g_counters; }
void reset_counters() { g_counters = Counters{}; }
}  // namespace instrumentation
#endif

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() { std::memset(&value_, 0, sizeof(value_)); }

Scalar Scalar::from_u64(std::uint64_t v) {
    const std::uint64_t limbs[4] = {v, 0, 0, 0};
    Scalar s;
    blst_fr_from_uint64(&s.value_, limbs);
    return s;
}

Scalar Scalar::from_i64(std::int64_t v) {
    if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
    const std::uint64_t mag = ~static_cast<std::uint64_t>(v) + 1;
    return -from_u64(mag);
}

Scalar Scalar::from_bytes_reduce(std::span<const std::uint8_t> be) {
    blst_scalar sc;
    blst_scalar_from_be_bytes(&sc, be.data(), be.size());
    Scalar s;
    blst_fr_from_scalar(&s.value_, &sc);
    sodium_memzero(&sc, sizeof(sc));
    return s;
}

std::optional<Scalar> Scalar::from_canonical(std::span<const std::uint8_t> be) {
    if (be.size() != kBytes) return std::nullopt;
    if (!std::lexicographical_compare(be.begin(), be.end(), kGroupOrder.begin(), kGroupOrder.end()))
        return std::nullopt;
    blst_scalar sc;
    blst_scalar_from_bendian(&sc, be.data());
    Scalar s;
    blst_fr_from_scalar(&s.value_, &sc);
    return s;
}

blst_scalar Scalar::to_blst_scalar() const {
    blst_scalar sc;
    blst_scalar_from_fr(&sc, &value_);
    return sc;
}

std::array<std::uint8_t, Scalar::kBytes> Scalar::to_bytes() const {
    const blst_scalar sc = to_blst_scalar();
    std::array<std::uint8_t, kBytes> out{};
    blst_bendian_from_scalar(out.data(), &sc);
    return out;
}

std::string Scalar::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (auto b : to_bytes()) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0xf]);
    }
    return out;
}

bool Scalar::is_zero() const {
    std::uint64_t limbs[4];
    blst_uint64_from_fr(limbs, &value_);
    return (limbs[0] | limbs[1] | limbs[2] | limbs[3]) == 0;
}

Scalar Scalar::inverse() const {
    Scalar s;
    blst_fr_eucl_inverse(&s.value_, &value_);
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar s;
    blst_fr_add(&s.value_, &a.value_, &b.value_);
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar s;
    blst_fr_sub(&s.value_, &a.value_, &b.value_);
    return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar s;
    blst_fr_mul(&s.value_, &a.value_, &b.value_);
    return s;
}

Scalar operator-(const Scalar& a) {
    Scalar s;
    blst_fr_cneg(&s.value_, &a.value_, true);
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    std::uint64_t x[4], y[4];
    blst_uint64_from_fr(x, &a.value_);
    blst_uint64_from_fr(y, &b.value_);
    return std::equal(std::begin(x), std::end(x), std::begin(y));
}

const std::array<std::uint8_t, Scalar::kBytes>& Scalar::modulus() { return kGroupOrder; }

void Scalar::wipe() { sodium_memzero(&value_, sizeof(value_)); }

Scalar random_scalar(Rng& rng) {
    // 512 bits reduced mod r: statistical distance from uniform below 2^-256.
    std::array<std::uint8_t, 64> wide{};
    rng.fill(wide);
    Scalar s = Scalar::from_bytes_reduce(wide);
    sodium_memzero(wide.data(), wide.size());
    return s;
}

// --------------------------------------------------------- PairedElement

PairedElement::PairedElement() {
    std::memset(&left_, 0, sizeof(left_));
    std::memset(&right_, 0, sizeof(right_));
}

PairedElement PairedElement::generator() {
    PairedElement g;
    g.left_ = *blst_p1_generator();
    g.right_ = *blst_p2_generator();
    return g;
}

PairedElement PairedElement::identity() { return PairedElement(); }

PairedElement generator() { return PairedElement::generator(); }

bool PairedElement::is_identity() const { return blst_p1_is_inf(&left_) && blst_p2_is_inf(&right_); }

bool PairedElement::is_consistent() const {
    if (blst_p1_is_inf(&left_) || blst_p2_is_inf(&right_))
        return blst_p1_is_inf(&left_) && blst_p2_is_inf(&right_);
    blst_p1_affine l;
    blst_p2_affine r;
    blst_p1_to_affine(&l, &left_);
    blst_p2_to_affine(&r, &right_);
    blst_fp12 a, b;
    blst_miller_loop(&a, blst_p2_affine_generator(), &l);
    blst_miller_loop(&b, &r, blst_p1_affine_generator());
    count_pairings(2);
    return blst_fp12_finalverify(&a, &b);
}

std::array<std::uint8_t, PairedElement::kBytes> PairedElement::to_bytes() const {
    std::array<std::uint8_t, kBytes> out{};
    blst_p1_compress(out.data(), &left_);
    blst_p2_compress(out.data() + kLeftBytes, &right_);
    return out;
}

std::optional<PairedElement> PairedElement::from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kBytes) return std::nullopt;
    blst_p1_affine l;
    blst_p2_affine r;
    if (blst_p1_uncompress(&l, bytes.data()) != BLST_SUCCESS) return std::nullopt;
    if (blst_p2_uncompress(&r, bytes.data() + kLeftBytes) != BLST_SUCCESS) return std::nullopt;
    if (!blst_p1_affine_in_g1(&l) || !blst_p2_affine_in_g2(&r)) return std::nullopt;
    PairedElement e;
    blst_p1_from_affine(&e.left_, &l);
    blst_p2_from_affine(&e.right_, &r);
    return e;
}

bool operator==(const PairedElement& a, const PairedElement& b) {
    return blst_p1_is_equal(&a.left_, &b.left_) && blst_p2_is_equal(&a.right_, &b.right_);
}

PairedElement exp(const PairedElement& base, const Scalar& s) {
    blst_scalar sc = s.to_blst_scalar();
    PairedElement out;
    if (!(base.cache_ && base.cache_->try_exp(sc, out.left_, out.right_))) {
        blst_p1_mult(&out.left_, &base.left_, sc.b, kScalarBits);
        blst_p2_mult(&out.right_, &base.right_, sc.b, kScalarBits);
    }
    sodium_memzero(&sc, sizeof(sc));
    return out;
}

void PairedElement::prepare() {
    if (!cache_ && !is_identity()) cache_ = std::make_shared<detail::FixedBaseCache>(left_, right_);
}

PairedElement mul(const PairedElement& x, const PairedElement& y) {
    PairedElement out;
    blst_p1_add_or_double(&out.left_, &x.left_, &y.left_);
    blst_p2_add_or_double(&out.right_, &x.right_, &y.right_);
    return out;
}

PairedElement inverse(const PairedElement& x) {
    PairedElement out;
    out.left_ = x.left_;
    out.right_ = x.right_;
    blst_p1_cneg(&out.left_, true);
    blst_p2_cneg(&out.right_, true);
    return out;
}

PairedElement multi_exp(std::span<const PairedElement> bases, std::span<const Scalar> exps) {
    if (bases.size() != exps.size()) throw std::invalid_argument("multi_exp: size mismatch");

    // Tabled bases are accumulated directly; the rest go through one
    // Pippenger/Straus pass.
    PairedElement out;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        const PairedElement& b = bases[i];
        if (b.is_identity() || exps[i].is_zero()) continue;
        blst_scalar sc = exps[i].to_blst_scalar();
        PairedElement term;
        if (b.cache_ && b.cache_->try_exp(sc, term.left_, term.right_)) {
            blst_p1_add_or_double(&out.left_, &out.left_, &term.left_);
            blst_p2_add_or_double(&out.right_, &out.right_, &term.right_);
        } else {
            rest.push_back(i);
        }
        sodium_memzero(&sc, sizeof(sc));
    }
    if (rest.empty()) return out;
    if (rest.size() == 1) return mul(out, exp(bases[rest[0]], exps[rest[0]]));

    const std::size_t n = rest.size();
    std::vector<blst_scalar> sc(n);
    std::vector<const byte*> sp(n);
    std::vector<blst_p1_affine> la(n);
    std::vector<blst_p2_affine> ra(n);
    std::vector<const blst_p1*> lp(n);
    std::vector<const blst_p2*> rp(n);
    std::vector<const blst_p1_affine*> lap(n);
    std::vector<const blst_p2_affine*> rap(n);
    for (std::size_t k = 0; k < n; ++k) {
        sc[k] = exps[rest[k]].to_blst_scalar();
        sp[k] = sc[k].b;
        lp[k] = &bases[rest[k]].left_;
        rp[k] = &bases[rest[k]].right_;
        lap[k] = &la[k];
        rap[k] = &ra[k];
    }
    blst_p1s_to_affine(la.data(), lp.data(), n);
    blst_p2s_to_affine(ra.data(), rp.data(), n);

    std::vector<std::uint8_t> scratch(
        std::max(blst_p1s_mult_pippenger_scratch_sizeof(n), blst_p2s_mult_pippenger_scratch_sizeof(n)));
    PairedElement acc;
    blst_p1s_mult_pippenger(&acc.left_, lap.data(), n, sp.data(), kScalarBits,
                            reinterpret_cast<limb_t*>(scratch.data()));
    blst_p2s_mult_pippenger(&acc.right_, rap.data(), n, sp.data(), kScalarBits,
                            reinterpret_cast<limb_t*>(scratch.data()));
    sodium_memzero(sc.data(), sc.size() * sizeof(blst_scalar));
    return mul(out, acc);
}

bool batch_consistent(std::span<const PairedElement> elems, Rng& rng) {
    blst_p1 acc_left;
    blst_p2 acc_right;
    std::memset(&acc_left, 0, sizeof(acc_left));
    std::memset(&acc_right, 0, sizeof(acc_right));
    for (const auto& e : elems) {
        std::array<std::uint8_t, 16> r{};
        rng.fill(r);
        r[15] |= 1;  // nonzero
        blst_p1 tl;
        blst_p2 tr;
        blst_p1_mult(&tl, &e.left(), r.data(), 128);
        blst_p2_mult(&tr, &e.right(), r.data(), 128);
        blst_p1_add_or_double(&acc_left, &acc_left, &tl);
        blst_p2_add_or_double(&acc_right, &acc_right, &tr);
    }
    const bool li = blst_p1_is_inf(&acc_left);
    const bool ri = blst_p2_is_inf(&acc_right);
    if (li || ri) return li && ri;
    blst_p1_affine l;
    blst_p2_affine r;
    blst_p1_to_affine(&l, &acc_left);
    blst_p2_to_affine(&r, &acc_right);
    blst_fp12 a, b;
    blst_miller_loop(&a, blst_p2_affine_generator(), &l);
    blst_miller_loop(&b, &r, blst_p1_affine_generator());
    count_pairings(2);
    return blst_fp12_finalverify(&a, &b);
}

// --------------------------------------------------------- TargetElement

TargetElement::TargetElement() : value_(*blst_fp12_one()) {}

TargetElement TargetElement::identity() { return TargetElement(); }

bool TargetElement::is_identity() const { return blst_fp12_is_one(&value_); }

std::array<std::uint8_t, TargetElement::kBytes> TargetElement::to_bytes() const {
    std::array<std::uint8_t, kBytes> out{};
    blst_bendian_from_fp12(out.data(), &value_);
    return out;
}

std::optional<TargetElement> TargetElement::from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kBytes) return std::nullopt;
    TargetElement t;
    // Same coefficient order as blst_bendian_from_fp12.
    const std::uint8_t* p = bytes.data();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                blst_fp_from_bendian(&t.value_.fp6[j].fp2[i].fp[k], p);
                p += 48;
            }
        }
    }
    // A coefficient >= the field modulus does not re-encode to itself.
    const auto canon = t.to_bytes();
    if (!std::equal(canon.begin(), canon.end(), bytes.begin())) return std::nullopt;
    if (!blst_fp12_in_group(&t.value_)) return std::nullopt;
    return t;
}

bool operator==(const TargetElement& a, const TargetElement& b) {
    return blst_fp12_is_equal(&a.value_, &b.value_);
}

TargetElement target_mul(const TargetElement& a, const TargetElement& b) {
    TargetElement out;
    blst_fp12_mul(&out.value_, &a.value_, &b.value_);
    return out;
}

TargetElement target_exp(const TargetElement& a, const Scalar& s) {
    // Fixed 4-bit window, most significant nibble first.
    blst_scalar sc = s.to_blst_scalar();
    std::array<blst_fp12, 16> table;
    table[0] = *blst_fp12_one();
    table[1] = a.value_;
    for (std::size_t i = 2; i < table.size(); ++i) blst_fp12_mul(&table[i], &table[i - 1], &a.value_);

    TargetElement out;
    bool started = false;
    for (int byte = Scalar::kBytes - 1; byte >= 0; --byte) {
        for (int half = 1; half >= 0; --half) {
            const unsigned nibble = (sc.b[byte] >> (4 * half)) & 0xf;
            if (started) {
                for (int k = 0; k < 4; ++k) blst_fp12_cyclotomic_sqr(&out.value_, &out.value_);
            }
            if (nibble != 0) {
                blst_fp12_mul(&out.value_, &out.value_, &table[nibble]);
                started = true;
            }
        }
    }
    sodium_memzero(&sc, sizeof(sc));
    return out;
}

TargetElement target_inverse(const TargetElement& a) {
    // Elements of the cyclotomic subgroup invert by conjugation.
    TargetElement out = a;
    blst_fp12_conjugate(&out.value_);
    return out;
}

// -------------------------------------------------------- PairingProduct

void PairingProduct::add(const PairedElement& x, const PairedElement& y) {
    count_pairings(1);
    if (blst_p1_is_inf(&x.left()) || blst_p2_is_inf(&y.right())) return;
    blst_p1_affine l;
    blst_p2_affine r;
    blst_p1_to_affine(&l, &x.left());
    blst_p2_to_affine(&r, &y.right());
    lefts_.push_back(l);
    rights_.push_back(r);
}

TargetElement PairingProduct::finish() const {
    TargetElement out;
    count_final_exp();
    if (lefts_.empty()) return out;
    std::vector<const blst_p1_affine*> ps(lefts_.size());
    std::vector<const blst_p2_affine*> qs(rights_.size());
    for (std::size_t i = 0; i < lefts_.size(); ++i) {
        ps[i] = &lefts_[i];
        qs[i] = &rights_[i];
    }
    blst_fp12 ml;
    blst_miller_loop_n(&ml, qs.data(), ps.data(), ps.size());
    blst_final_exp(&out.value_, &ml);
    return out;
}

TargetElement pair(const PairedElement& x, const PairedElement& y) {
    PairingProduct prod;
    prod.add(x, y);
    return prod.finish();
}

}  // namespace hve
