#pragma once

// Shared generators and oracles for the test binaries.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hve/pairing.hpp"
#include "hve/pattern.hpp"
#include "hve/rng.hpp"

namespace hve::test {

/// The group order as a GMP integer, parsed from its byte encoding.
inline const mpz_class& order() {
    static const mpz_class r = [] {
        mpz_class v;
        const auto& m = Scalar::modulus();
        mpz_import(v.get_mpz_t(), m.size(), 1, 1, 1, 0, m.data());
        return v;
    }();
    return r;
}

inline mpz_class to_mpz(const Scalar& s) {
    const auto b = s.to_bytes();
    mpz_class v;
    mpz_import(v.get_mpz_t(), b.size(), 1, 1, 1, 0, b.data());
    return v;
}

inline Scalar from_mpz(mpz_class v) {
    v %= order();
    if (v < 0) v += order();
    std::vector<std::uint8_t> buf(32, 0);
    std::size_t count = 0;
    std::vector<std::uint8_t> raw(32);
    mpz_export(raw.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
    std::copy(raw.begin(), raw.begin() + count, buf.end() - count);
    return Scalar::from_bytes_reduce(buf);
}

/// Uniform random attribute scalars.
inline AttributeVector random_attrs(std::size_t ell, Rng& rng) {
    AttributeVector x;
    for (std::size_t i = 0; i < ell; ++i) x.push_back(random_scalar(rng));
    return x;
}

inline std::vector<std::uint8_t> random_bytes(std::size_t max_len, Rng& rng) {
    std::vector<std::uint8_t> out(rng.uniform(max_len + 1));
    rng.fill(out);
    return out;
}

/// A pattern that x satisfies: each slot Wild or Fixed to x_i (or Deleg when allowed).
inline Pattern matching_pattern(const AttributeVector& x, Rng& rng, bool allow_deleg = false) {
    std::vector<Slot> slots;
    for (const auto& v : x) {
        const auto pick = rng.uniform(allow_deleg ? 3 : 2);
        slots.push_back(pick == 0 ? Slot::wild() : pick == 1 ? Slot::fixed(v) : Slot::deleg());
    }
    return Pattern(std::move(slots));
}

/// A pattern x does not satisfy: at least one Fixed slot carries a different value.
inline Pattern mismatching_pattern(const AttributeVector& x, Rng& rng, bool allow_deleg = false) {
    Pattern base = matching_pattern(x, rng, allow_deleg);
    std::vector<Slot> slots = base.slots();
    const std::size_t bad = rng.uniform(x.size());
    slots[bad] = Slot::fixed(x[bad] + Scalar::from_u64(1 + rng.uniform(1000)));
    return Pattern(std::move(slots));
}

}  // namespace hve::test
