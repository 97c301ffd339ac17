#pragma once

// Checks and payload plumbing shared by the three schemes.

#include <string>

#include "hve/errors.hpp"
#include "hve/pattern.hpp"
#include "hve/payload.hpp"

namespace hve::detail {

inline void require_ell(std::size_t ell) {
    if (ell == 0) throw ParameterError("vector length must be at least 1");
}

inline void require_length(std::size_t got, std::size_t ell, const char* what) {
    if (got != ell)
        throw ParameterError(std::string(what) + " has length " + std::to_string(got) +
                             ", scheme length is " + std::to_string(ell));
}

inline void require_no_deleg(const Pattern& p) {
    if (p.has_deleg()) throw ParameterError("delegatable slots are only supported by SW");
}

inline Payload make_payload_block(std::span<const std::uint8_t> payload, const TargetElement& mask) {
    return encode_payload(payload, mask);
}

inline std::optional<std::vector<std::uint8_t>> open_payload(const Payload& c0,
                                                             const TargetElement& d) {
    const auto* block = std::get_if<PayloadBlock>(&c0);
    if (block == nullptr) throw ParameterError("literal-mode ciphertext: use query_literal");
    return decode_payload(*block, d);
}

inline TargetElement open_literal(const Payload& c0, const TargetElement& d) {
    const auto* m = std::get_if<TargetElement>(&c0);
    if (m == nullptr) throw ParameterError("payload-mode ciphertext: use query");
    return target_mul(*m, target_inverse(d));
}

}  // namespace hve::detail
