#pragma once

// Binary container for keys, tokens and ciphertexts, and the text syntax for
// patterns and attribute vectors. FORMATS.md is the normative description.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "hve/bw.hpp"
#include "hve/ll.hpp"
#include "hve/sw.hpp"

namespace hve::wire {

inline constexpr std::uint8_t kMagic[4] = {'H', 'V', 'E', '1'};
/// Upper bound on ell accepted by the decoder.
inline constexpr std::uint32_t kMaxEll = 1u << 16;

enum class SchemeId : std::uint8_t { BW = 1, SW = 2, LL = 3 };
enum class ObjectKind : std::uint8_t { PublicKey = 1, SecretKey = 2, Token = 3, Ciphertext = 4 };

const char* to_string(SchemeId s);
const char* to_string(ObjectKind k);

// SW and LL share key and ciphertext types; the scheme field tells them apart.
using Body = std::variant<bw::PublicKey, bw::SecretKey, bw::Token, bw::Ciphertext, basis3::PublicKey,
                          basis3::SecretKey, sw::Token, ll::Token, basis3::Ciphertext>;

struct WireObject {
    SchemeId scheme = SchemeId::BW;
    ObjectKind kind = ObjectKind::PublicKey;
    std::uint32_t ell = 0;
    Body body;
};

WireObject make_object(const bw::PublicKey& v);
WireObject make_object(const bw::SecretKey& v);
WireObject make_object(const bw::Token& v);
WireObject make_object(const bw::Ciphertext& v);
WireObject make_object(SchemeId scheme, const basis3::PublicKey& v);
WireObject make_object(SchemeId scheme, const basis3::SecretKey& v);
WireObject make_object(const sw::Token& v);
WireObject make_object(const ll::Token& v);
WireObject make_object(SchemeId scheme, const basis3::Ciphertext& v);

/// Throws EncodingError when the header disagrees with the body.
std::vector<std::uint8_t> encode_object(const WireObject& obj);

/// Fully validating decode: header, lengths, canonical and subgroup-checked
/// points, pairing consistency of every source element, token shape against
/// its pattern. Decoded keys are marked for fixed-base acceleration.
/// Throws DecodeError with the offending byte position.
WireObject decode_object(std::span<const std::uint8_t> bytes);

/// Comma-separated slots: `*` Wild, `?` Deleg, anything else an attribute
/// string passed through hash_attribute. Surrounding spaces are trimmed.
/// Throws ParameterError on a length mismatch or `?` outside SW.
Pattern parse_pattern_text(std::string_view text, std::size_t ell, SchemeId scheme);

/// Comma-separated attribute strings; `*` and `?` are rejected.
AttributeVector parse_attribute_text(std::string_view text, std::size_t ell);

/// Single attribute string for delegation.
Scalar parse_attribute(std::string_view text);

}  // namespace hve::wire
