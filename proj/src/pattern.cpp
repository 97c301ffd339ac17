#include "hve/pattern.hpp"

#include "hve/errors.hpp"

namespace hve {

Pattern Pattern::exact(const AttributeVector& x) {
    std::vector<Slot> slots;
    slots.reserve(x.size());
    for (const auto& v : x) slots.push_back(Slot::fixed(v));
    return Pattern(std::move(slots));
}

std::vector<std::size_t> Pattern::fixed_indexes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < slots_.size(); ++i)
        if (slots_[i].kind == SlotKind::Fixed) out.push_back(i);
    return out;
}

std::vector<std::size_t> Pattern::deleg_indexes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < slots_.size(); ++i)
        if (slots_[i].kind == SlotKind::Deleg) out.push_back(i);
    return out;
}

bool Pattern::has_deleg() const {
    for (const auto& s : slots_)
        if (s.kind == SlotKind::Deleg) return true;
    return false;
}

bool Pattern::matches(const AttributeVector& x) const {
    if (x.size() != slots_.size()) throw ParameterError("pattern/attribute length mismatch");
    for (std::size_t i = 0; i < slots_.size(); ++i)
        if (slots_[i].kind == SlotKind::Fixed && !(slots_[i].value == x[i])) return false;
    return true;
}

}  // namespace hve
