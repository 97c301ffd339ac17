#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hve/pairing.hpp"

namespace hve {

/// Ciphertext attributes, one scalar per slot.
using AttributeVector = std::vector<Scalar>;

enum class SlotKind : std::uint8_t {
    Wild = 0,   // matches anything
    Fixed = 1,  // must equal the attribute
    Deleg = 2,  // delegatable; imposes no constraint until delegated
};

struct Slot {
    SlotKind kind = SlotKind::Wild;
    Scalar value;  // meaningful for Fixed only

    static Slot wild() { return {SlotKind::Wild, Scalar()}; }
    static Slot deleg() { return {SlotKind::Deleg, Scalar()}; }
    static Slot fixed(const Scalar& v) { return {SlotKind::Fixed, v}; }

    friend bool operator==(const Slot& a, const Slot& b) {
        return a.kind == b.kind && (a.kind != SlotKind::Fixed || a.value == b.value);
    }
};

class Pattern {
  public:
    Pattern() = default;
    explicit Pattern(std::vector<Slot> slots) : slots_(std::move(slots)) {}

    /// Every slot Fixed to the corresponding attribute.
    static Pattern exact(const AttributeVector& x);

    std::size_t size() const { return slots_.size(); }
    const Slot& operator[](std::size_t i) const { return slots_[i]; }
    const std::vector<Slot>& slots() const { return slots_; }

    /// S: Fixed indexes, ascending.
    std::vector<std::size_t> fixed_indexes() const;
    /// S?: Deleg indexes, ascending.
    std::vector<std::size_t> deleg_indexes() const;
    bool has_deleg() const;

    /// The predicate f_sigma(x): every Fixed slot equals its attribute.
    bool matches(const AttributeVector& x) const;

    friend bool operator==(const Pattern& a, const Pattern& b) = default;

  private:
    std::vector<Slot> slots_;
};

}  // namespace hve
