#include "hve/wire.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "hve/errors.hpp"
#include "hve/payload.hpp"

namespace hve::wire {

namespace {

constexpr std::size_t kHeaderBytes = 10;
constexpr std::uint8_t kModeBlock = 0, kModeLiteral = 1;

// ---- writing ----

class Writer {
  public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u32(std::uint32_t v) {
        for (int s = 24; s >= 0; s -= 8) out_.push_back(static_cast<std::uint8_t>(v >> s));
    }
    void raw(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
    std::vector<std::uint8_t>& bytes() { return out_; }

  private:
    std::vector<std::uint8_t> out_;
};

/// Collects components; each becomes (u32 length, bytes) in the body.
class Components {
  public:
    std::vector<std::uint8_t>& next() { return parts_.emplace_back(); }

    void vec(const GroupVector& v) {
        auto& c = next();
        for (const auto& e : v.elems()) {
            const auto b = e.to_bytes();
            c.insert(c.end(), b.begin(), b.end());
        }
    }
    void vecs(const std::vector<GroupVector>& vs) {
        for (const auto& v : vs) vec(v);
    }
    void gt(const TargetElement& t) {
        const auto b = t.to_bytes();
        next().assign(b.begin(), b.end());
    }
    void pattern(const Pattern& p) {
        auto& c = next();
        for (const auto& s : p.slots()) {
            c.push_back(static_cast<std::uint8_t>(s.kind));
            if (s.kind == SlotKind::Fixed) {
                const auto b = s.value.to_bytes();
                c.insert(c.end(), b.begin(), b.end());
            }
        }
    }
    void payload(const Payload& c0) {
        auto& c = next();
        if (const auto* block = std::get_if<PayloadBlock>(&c0)) {
            c.push_back(kModeBlock);
            c.insert(c.end(), block->bytes.begin(), block->bytes.end());
        } else {
            c.push_back(kModeLiteral);
            const auto b = std::get<TargetElement>(c0).to_bytes();
            c.insert(c.end(), b.begin(), b.end());
        }
    }

    void write(Writer& w) const {
        w.u32(static_cast<std::uint32_t>(parts_.size()));
        for (const auto& p : parts_) {
            w.u32(static_cast<std::uint32_t>(p.size()));
            w.raw(p);
        }
    }

  private:
    std::vector<std::vector<std::uint8_t>> parts_;
};

void put(Components& c, const bw::PublicKey& pk) {
    c.vec(pk.b11);
    c.vec(pk.b12);
    c.vec(pk.b2);
    c.vec(pk.vc);
    for (std::size_t i = 0; i < pk.ell; ++i) {
        c.vec(pk.uc[i]);
        c.vec(pk.hc[i]);
        c.vec(pk.wc[i]);
    }
    c.gt(pk.omega);
}

void put(Components& c, const bw::SecretKey& sk) {
    c.vec(sk.vk);
    for (std::size_t i = 0; i < sk.ell; ++i) {
        c.vec(sk.uk[i]);
        c.vec(sk.hk[i]);
        c.vec(sk.wk[i]);
    }
    c.vec(sk.alpha_elem);
}

void put(Components& c, const bw::Token& tk) {
    c.pattern(tk.pattern);
    c.vec(tk.k1);
    for (const auto& s : tk.slots) {
        c.vec(s.k2);
        c.vec(s.k3);
    }
}

void put(Components& c, const bw::Ciphertext& ct) {
    c.payload(ct.c0);
    c.vec(ct.c1);
    for (std::size_t i = 0; i < ct.c2.size(); ++i) {
        c.vec(ct.c2[i]);
        c.vec(ct.c3[i]);
    }
}

void put(Components& c, const basis3::PublicKey& pk) {
    for (const auto* v : {&pk.b11, &pk.b12, &pk.b2, &pk.b3, &pk.vc, &pk.wc1, &pk.wc2}) c.vec(*v);
    for (std::size_t i = 0; i < pk.ell; ++i) {
        c.vec(pk.uc[i]);
        c.vec(pk.hc[i]);
    }
    c.gt(pk.omega);
}

void put(Components& c, const basis3::SecretKey& sk) {
    for (const auto* v : {&sk.vk, &sk.wk1, &sk.wk2}) c.vec(*v);
    for (std::size_t i = 0; i < sk.ell; ++i) {
        c.vec(sk.uk[i]);
        c.vec(sk.hk[i]);
    }
    c.vec(sk.alpha_elem);
    c.vec(sk.b3);
}

void put(Components& c, const sw::Token& tk) {
    c.pattern(tk.pattern);
    for (const auto* v : {&tk.k1, &tk.k2, &tk.k3}) c.vec(*v);
    for (const auto& e : tk.k4) c.vec(e.value);
    for (const auto& row : tk.rows) {
        for (const auto* v : {&row.l1u, &row.l1h, &row.l2, &row.l3}) c.vec(*v);
        for (const auto& e : row.l4) c.vec(e.value);
    }
}

void put(Components& c, const ll::Token& tk) {
    c.pattern(tk.pattern);
    for (const auto* v : {&tk.k1, &tk.k2, &tk.k3, &tk.k4}) c.vec(*v);
}

void put(Components& c, const basis3::Ciphertext& ct) {
    c.payload(ct.c0);
    for (const auto* v : {&ct.c1, &ct.c2, &ct.c3}) c.vec(*v);
    c.vecs(ct.c4);
}

template <class T>
constexpr ObjectKind kind_of() {
    if constexpr (std::is_same_v<T, bw::PublicKey> || std::is_same_v<T, basis3::PublicKey>)
        return ObjectKind::PublicKey;
    else if constexpr (std::is_same_v<T, bw::SecretKey> || std::is_same_v<T, basis3::SecretKey>)
        return ObjectKind::SecretKey;
    else if constexpr (std::is_same_v<T, bw::Ciphertext> || std::is_same_v<T, basis3::Ciphertext>)
        return ObjectKind::Ciphertext;
    else
        return ObjectKind::Token;
}

template <class T>
bool scheme_fits(SchemeId s) {
    if constexpr (std::is_same_v<T, bw::PublicKey> || std::is_same_v<T, bw::SecretKey> ||
                  std::is_same_v<T, bw::Token> || std::is_same_v<T, bw::Ciphertext>)
        return s == SchemeId::BW;
    else if constexpr (std::is_same_v<T, sw::Token>)
        return s == SchemeId::SW;
    else if constexpr (std::is_same_v<T, ll::Token>)
        return s == SchemeId::LL;
    else
        return s == SchemeId::SW || s == SchemeId::LL;
}

template <class T>
std::size_t ell_of(const T& v) {
    if constexpr (requires { v.ell; })
        return v.ell;
    else if constexpr (requires { v.pattern; })
        return v.pattern.size();
    else if constexpr (requires { v.c4; })
        return v.c4.size();
    else
        return v.c2.size();
}

template <class T>
WireObject make(SchemeId scheme, const T& v) {
    const std::size_t ell = ell_of(v);
    if (ell == 0 || ell > kMaxEll) throw EncodingError("object length out of range");
    return {scheme, kind_of<T>(), static_cast<std::uint32_t>(ell), v};
}

// Count checks so that a malformed in-memory object cannot produce bytes the
// decoder would misread.
template <class T>
void check_body(const T& v, std::size_t ell) {
    auto vec_count = [](const auto& vs, std::size_t n) {
        if (vs.size() != n) throw EncodingError("component list has wrong length");
    };
    if constexpr (std::is_same_v<T, bw::PublicKey>) {
        vec_count(v.uc, ell), vec_count(v.hc, ell), vec_count(v.wc, ell);
    } else if constexpr (std::is_same_v<T, bw::SecretKey>) {
        vec_count(v.uk, ell), vec_count(v.hk, ell), vec_count(v.wk, ell);
    } else if constexpr (std::is_same_v<T, basis3::PublicKey>) {
        vec_count(v.uc, ell), vec_count(v.hc, ell);
    } else if constexpr (std::is_same_v<T, basis3::SecretKey>) {
        vec_count(v.uk, ell), vec_count(v.hk, ell);
    } else if constexpr (std::is_same_v<T, bw::Ciphertext>) {
        vec_count(v.c2, ell), vec_count(v.c3, ell);
    } else if constexpr (std::is_same_v<T, basis3::Ciphertext>) {
        vec_count(v.c4, ell);
    } else if constexpr (std::is_same_v<T, bw::Token>) {
        vec_count(v.slots, v.pattern.fixed_indexes().size());
        for (std::size_t k = 0; k < v.slots.size(); ++k)
            if (v.slots[k].index != v.pattern.fixed_indexes()[k]) throw EncodingError("token slot order");
    } else if constexpr (std::is_same_v<T, sw::Token>) {
        vec_count(v.k4, v.pattern.fixed_indexes().size());
        vec_count(v.rows, v.pattern.deleg_indexes().size());
        for (const auto& row : v.rows) vec_count(row.l4, v.k4.size() + 1);
    }
}

// ---- reading ----

class Reader {
  public:
    Reader(std::span<const std::uint8_t> b, std::size_t base) : b_(b), base_(base) {}

    std::size_t pos() const { return base_ + off_; }
    std::size_t remaining() const { return b_.size() - off_; }
    [[noreturn]] void fail(const std::string& what) const { throw DecodeError(pos(), what); }

    std::span<const std::uint8_t> take(std::size_t n, const char* what) {
        if (remaining() < n) fail(std::string("truncated ") + what);
        auto s = b_.subspan(off_, n);
        off_ += n;
        return s;
    }
    std::uint8_t u8(const char* what) { return take(1, what)[0]; }
    std::uint32_t u32(const char* what) {
        const auto s = take(4, what);
        return (std::uint32_t{s[0]} << 24) | (std::uint32_t{s[1]} << 16) | (std::uint32_t{s[2]} << 8) | s[3];
    }

  private:
    std::span<const std::uint8_t> b_;
    std::size_t base_;
    std::size_t off_ = 0;
};

struct Component {
    std::size_t pos;
    std::span<const std::uint8_t> bytes;
};

/// Walks the component list, decoding each component on demand.
class Parts {
  public:
    Parts(std::vector<Component> parts, std::size_t end) : parts_(std::move(parts)), end_(end) {}

    std::size_t count() const { return parts_.size(); }

    const Component& next() {
        if (next_ >= parts_.size()) throw DecodeError(end_, "missing component");
        return parts_[next_++];
    }

    GroupVector vec(std::size_t dim) {
        const auto& c = next();
        if (c.bytes.size() != dim * PairedElement::kBytes)
            throw DecodeError(c.pos, "group vector of " + std::to_string(c.bytes.size()) + " bytes, expected " +
                                         std::to_string(dim * PairedElement::kBytes));
        std::vector<PairedElement> elems;
        for (std::size_t i = 0; i < dim; ++i) {
            auto e = PairedElement::from_bytes(c.bytes.subspan(i * PairedElement::kBytes, PairedElement::kBytes));
            if (!e) throw DecodeError(c.pos + i * PairedElement::kBytes, "invalid group element");
            elems.push_back(*e);
            sources_.push_back({c.pos + i * PairedElement::kBytes, *e});
        }
        return GroupVector(std::move(elems));
    }

    std::vector<GroupVector> vecs(std::size_t n, std::size_t dim) {
        std::vector<GroupVector> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(vec(dim));
        return out;
    }

    TargetElement gt() {
        const auto& c = next();
        if (c.bytes.size() != TargetElement::kBytes) throw DecodeError(c.pos, "target element has wrong length");
        auto t = TargetElement::from_bytes(c.bytes);
        if (!t) throw DecodeError(c.pos, "invalid target element");
        return *t;
    }

    Pattern pattern(std::size_t ell) {
        const auto& c = next();
        Reader r(c.bytes, c.pos);
        std::vector<Slot> slots;
        for (std::size_t i = 0; i < ell; ++i) {
            const std::size_t at = r.pos();
            const std::uint8_t kind = r.u8("pattern");
            if (kind == static_cast<std::uint8_t>(SlotKind::Wild)) {
                slots.push_back(Slot::wild());
            } else if (kind == static_cast<std::uint8_t>(SlotKind::Deleg)) {
                slots.push_back(Slot::deleg());
            } else if (kind == static_cast<std::uint8_t>(SlotKind::Fixed)) {
                const std::size_t vat = r.pos();
                auto s = Scalar::from_canonical(r.take(Scalar::kBytes, "pattern value"));
                if (!s) throw DecodeError(vat, "non-canonical attribute value");
                slots.push_back(Slot::fixed(*s));
            } else {
                throw DecodeError(at, "unknown slot kind");
            }
        }
        if (r.remaining() != 0) r.fail("trailing bytes in pattern");
        return Pattern(std::move(slots));
    }

    Payload payload() {
        const auto& c = next();
        Reader r(c.bytes, c.pos);
        const std::uint8_t mode = r.u8("payload mode");
        if (mode == kModeBlock) {
            const std::size_t n = r.remaining();
            if (n < kTagBytes || n > kDefaultMaxPayload + kTagBytes) r.fail("payload block length out of range");
            const auto b = r.take(n, "payload");
            return PayloadBlock{{b.begin(), b.end()}};
        }
        if (mode == kModeLiteral) {
            if (r.remaining() != TargetElement::kBytes) r.fail("literal payload has wrong length");
            auto t = TargetElement::from_bytes(r.take(TargetElement::kBytes, "payload"));
            if (!t) throw DecodeError(c.pos + 1, "invalid target element");
            return *t;
        }
        throw DecodeError(c.pos, "unknown payload mode");
    }

    void finish() {
        if (next_ != parts_.size()) throw DecodeError(parts_[next_].pos, "unexpected extra component");
        // One random linear combination catches any element whose halves disagree.
        std::vector<PairedElement> elems;
        for (const auto& s : sources_) elems.push_back(s.elem);
        auto rng = Rng::from_os();
        if (batch_consistent(elems, rng)) return;
        for (const auto& s : sources_)
            if (!s.elem.is_consistent()) throw DecodeError(s.pos, "inconsistent group element");
        throw DecodeError(end_, "inconsistent group elements");
    }

  private:
    struct Source {
        std::size_t pos;
        PairedElement elem;
    };
    std::vector<Component> parts_;
    std::size_t end_;
    std::size_t next_ = 0;
    std::vector<Source> sources_;
};

void require_token_pattern(const Pattern& p, SchemeId scheme, std::size_t pos) {
    if (scheme != SchemeId::SW && p.has_deleg()) throw DecodeError(pos, "delegatable slot outside SW");
}

bw::PublicKey get_bw_pk(Parts& p, std::size_t ell) {
    bw::PublicKey pk;
    pk.ell = ell;
    pk.b11 = p.vec(2);
    pk.b12 = p.vec(2);
    pk.b2 = p.vec(2);
    pk.vc = p.vec(2);
    for (std::size_t i = 0; i < ell; ++i) {
        pk.uc.push_back(p.vec(2));
        pk.hc.push_back(p.vec(2));
        pk.wc.push_back(p.vec(2));
    }
    pk.omega = p.gt();
    bw::prepare(pk);
    return pk;
}

bw::SecretKey get_bw_sk(Parts& p, std::size_t ell) {
    bw::SecretKey sk;
    sk.ell = ell;
    sk.vk = p.vec(2);
    for (std::size_t i = 0; i < ell; ++i) {
        sk.uk.push_back(p.vec(2));
        sk.hk.push_back(p.vec(2));
        sk.wk.push_back(p.vec(2));
    }
    sk.alpha_elem = p.vec(2);
    bw::prepare(sk);
    return sk;
}

bw::Token get_bw_tk(Parts& p, std::size_t ell, std::size_t pos) {
    bw::Token tk;
    tk.pattern = p.pattern(ell);
    require_token_pattern(tk.pattern, SchemeId::BW, pos);
    tk.k1 = p.vec(2);
    for (std::size_t i : tk.pattern.fixed_indexes()) {
        bw::TokenSlot s;
        s.index = i;
        s.k2 = p.vec(2);
        s.k3 = p.vec(2);
        tk.slots.push_back(std::move(s));
    }
    return tk;
}

bw::Ciphertext get_bw_ct(Parts& p, std::size_t ell) {
    bw::Ciphertext ct;
    ct.c0 = p.payload();
    ct.c1 = p.vec(2);
    for (std::size_t i = 0; i < ell; ++i) {
        ct.c2.push_back(p.vec(2));
        ct.c3.push_back(p.vec(2));
    }
    return ct;
}

basis3::PublicKey get_b3_pk(Parts& p, std::size_t ell) {
    basis3::PublicKey pk;
    pk.ell = ell;
    for (auto* v : {&pk.b11, &pk.b12, &pk.b2, &pk.b3, &pk.vc, &pk.wc1, &pk.wc2}) *v = p.vec(3);
    for (std::size_t i = 0; i < ell; ++i) {
        pk.uc.push_back(p.vec(3));
        pk.hc.push_back(p.vec(3));
    }
    pk.omega = p.gt();
    basis3::prepare(pk);
    return pk;
}

basis3::SecretKey get_b3_sk(Parts& p, std::size_t ell) {
    basis3::SecretKey sk;
    sk.ell = ell;
    for (auto* v : {&sk.vk, &sk.wk1, &sk.wk2}) *v = p.vec(3);
    for (std::size_t i = 0; i < ell; ++i) {
        sk.uk.push_back(p.vec(3));
        sk.hk.push_back(p.vec(3));
    }
    sk.alpha_elem = p.vec(3);
    sk.b3 = p.vec(3);
    basis3::prepare(sk);
    return sk;
}

sw::Token get_sw_tk(Parts& p, std::size_t ell) {
    sw::Token tk;
    tk.pattern = p.pattern(ell);
    for (auto* v : {&tk.k1, &tk.k2, &tk.k3}) *v = p.vec(3);
    const auto fixed = tk.pattern.fixed_indexes();
    for (std::size_t i : fixed) tk.k4.push_back({i, p.vec(3)});
    for (std::size_t j : tk.pattern.deleg_indexes()) {
        sw::DelegationRow row;
        row.j = j;
        for (auto* v : {&row.l1u, &row.l1h, &row.l2, &row.l3}) *v = p.vec(3);
        std::vector<std::size_t> idx = fixed;
        idx.insert(std::upper_bound(idx.begin(), idx.end(), j), j);
        for (std::size_t i : idx) row.l4.push_back({i, p.vec(3)});
        tk.rows.push_back(std::move(row));
    }
    return tk;
}

ll::Token get_ll_tk(Parts& p, std::size_t ell, std::size_t pos) {
    ll::Token tk;
    tk.pattern = p.pattern(ell);
    require_token_pattern(tk.pattern, SchemeId::LL, pos);
    for (auto* v : {&tk.k1, &tk.k2, &tk.k3, &tk.k4}) *v = p.vec(3);
    return tk;
}

basis3::Ciphertext get_b3_ct(Parts& p, std::size_t ell) {
    basis3::Ciphertext ct;
    ct.c0 = p.payload();
    for (auto* v : {&ct.c1, &ct.c2, &ct.c3}) *v = p.vec(3);
    ct.c4 = p.vecs(ell, 3);
    return ct;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_slots(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        out.push_back(trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

const char* to_string(SchemeId s) {
    switch (s) {
        case SchemeId::BW: return "bw";
        case SchemeId::SW: return "sw";
        case SchemeId::LL: return "ll";
    }
    return "?";
}

const char* to_string(ObjectKind k) {
    switch (k) {
        case ObjectKind::PublicKey: return "public key";
        case ObjectKind::SecretKey: return "secret key";
        case ObjectKind::Token: return "token";
        case ObjectKind::Ciphertext: return "ciphertext";
    }
    return "?";
}

WireObject make_object(const bw::PublicKey& v) { return make(SchemeId::BW, v); }
WireObject make_object(const bw::SecretKey& v) { return make(SchemeId::BW, v); }
WireObject make_object(const bw::Token& v) { return make(SchemeId::BW, v); }
WireObject make_object(const bw::Ciphertext& v) { return make(SchemeId::BW, v); }
WireObject make_object(SchemeId scheme, const basis3::PublicKey& v) { return make(scheme, v); }
WireObject make_object(SchemeId scheme, const basis3::SecretKey& v) { return make(scheme, v); }
WireObject make_object(const sw::Token& v) { return make(SchemeId::SW, v); }
WireObject make_object(const ll::Token& v) { return make(SchemeId::LL, v); }
WireObject make_object(SchemeId scheme, const basis3::Ciphertext& v) { return make(scheme, v); }

std::vector<std::uint8_t> encode_object(const WireObject& obj) {
    Components comps;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if (kind_of<T>() != obj.kind || !scheme_fits<T>(obj.scheme))
                throw EncodingError("header does not match the object type");
            if (ell_of(v) != obj.ell || obj.ell == 0 || obj.ell > kMaxEll)
                throw EncodingError("header length does not match the object");
            check_body(v, obj.ell);
            if constexpr (std::is_same_v<T, bw::Token> || std::is_same_v<T, ll::Token>)
                if (v.pattern.has_deleg()) throw EncodingError("delegatable slot outside SW");
            put(comps, v);
        },
        obj.body);
    Writer w;
    w.raw(kMagic);
    w.u8(static_cast<std::uint8_t>(obj.scheme));
    w.u8(static_cast<std::uint8_t>(obj.kind));
    w.u32(obj.ell);
    comps.write(w);
    return std::move(w.bytes());
}

WireObject decode_object(std::span<const std::uint8_t> bytes) {
    Reader r(bytes, 0);
    if (!std::equal(std::begin(kMagic), std::end(kMagic), r.take(4, "magic").begin())) throw DecodeError(0, "bad magic");
    const std::size_t scheme_pos = r.pos();
    const std::uint8_t scheme = r.u8("scheme");
    if (scheme < 1 || scheme > 3) throw DecodeError(scheme_pos, "unknown scheme");
    const std::size_t kind_pos = r.pos();
    const std::uint8_t kind = r.u8("kind");
    if (kind < 1 || kind > 4) throw DecodeError(kind_pos, "unknown object kind");
    const std::size_t ell_pos = r.pos();
    const std::uint32_t ell = r.u32("length");
    if (ell == 0 || ell > kMaxEll) throw DecodeError(ell_pos, "length out of range");

    const std::uint32_t count = r.u32("component count");
    // Every component carries at least its 4-byte length.
    if (count > r.remaining() / 4) throw DecodeError(kHeaderBytes, "component count exceeds input");
    std::vector<Component> parts;
    for (std::uint32_t k = 0; k < count; ++k) {
        const std::uint32_t len = r.u32("component length");
        const std::size_t at = r.pos();
        parts.push_back({at, r.take(len, "component")});
    }
    if (r.remaining() != 0) r.fail("trailing bytes");

    Parts p(std::move(parts), bytes.size());
    WireObject obj;
    obj.scheme = static_cast<SchemeId>(scheme);
    obj.kind = static_cast<ObjectKind>(kind);
    obj.ell = ell;
    const std::size_t body_pos = kHeaderBytes + 4;
    const bool bw = obj.scheme == SchemeId::BW;
    switch (obj.kind) {
        case ObjectKind::PublicKey:
            obj.body = bw ? Body(get_bw_pk(p, ell)) : Body(get_b3_pk(p, ell));
            break;
        case ObjectKind::SecretKey:
            obj.body = bw ? Body(get_bw_sk(p, ell)) : Body(get_b3_sk(p, ell));
            break;
        case ObjectKind::Token:
            if (bw)
                obj.body = get_bw_tk(p, ell, body_pos);
            else if (obj.scheme == SchemeId::SW)
                obj.body = get_sw_tk(p, ell);
            else
                obj.body = get_ll_tk(p, ell, body_pos);
            break;
        case ObjectKind::Ciphertext:
            obj.body = bw ? Body(get_bw_ct(p, ell)) : Body(get_b3_ct(p, ell));
            break;
    }
    p.finish();
    return obj;
}

Pattern parse_pattern_text(std::string_view text, std::size_t ell, SchemeId scheme) {
    const auto parts = split_slots(text);
    if (parts.size() != ell)
        throw ParameterError("pattern has " + std::to_string(parts.size()) + " slots, scheme length is " +
                             std::to_string(ell));
    std::vector<Slot> slots;
    for (const auto& s : parts) {
        if (s == "*") {
            slots.push_back(Slot::wild());
        } else if (s == "?") {
            if (scheme != SchemeId::SW) throw ParameterError("'?' slots are only supported by SW");
            slots.push_back(Slot::deleg());
        } else {
            slots.push_back(Slot::fixed(parse_attribute(s)));
        }
    }
    return Pattern(std::move(slots));
}

AttributeVector parse_attribute_text(std::string_view text, std::size_t ell) {
    const auto parts = split_slots(text);
    if (parts.size() != ell)
        throw ParameterError("attribute list has " + std::to_string(parts.size()) + " entries, scheme length is " +
                             std::to_string(ell));
    AttributeVector x;
    for (const auto& s : parts) {
        if (s == "*" || s == "?") throw ParameterError("attributes cannot be '*' or '?'");
        x.push_back(parse_attribute(s));
    }
    return x;
}

Scalar parse_attribute(std::string_view text) {
    const std::string s = trim(text);
    if (s.empty()) throw ParameterError("empty attribute string");
    return hash_attribute(s);
}

}  // namespace hve::wire
