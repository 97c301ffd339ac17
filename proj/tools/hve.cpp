// Command-line front end: key generation, tokens, delegation, encryption,
// queries and the generic-group checker. Exit codes are listed in FORMATS.md.

#include <sodium.h>

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "hve/errors.hpp"
#include "hve/ggm.hpp"
#include "hve/wire.hpp"

namespace fs = std::filesystem;
using namespace hve;
using wire::ObjectKind;
using wire::SchemeId;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kIo = 2, kNotSatisfied = 3, kInsecure = 4 };

/// Failure carrying its exit code.
struct Failure {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw Failure{code, std::move(message)}; }

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(kIo, "cannot open " + path);
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) fail(kIo, "cannot read " + path);
    return data;
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(kIo, "cannot create " + path);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out.flush()) fail(kIo, "cannot write " + path);
}

wire::WireObject load(const std::string& path, ObjectKind want) {
    const auto bytes = read_file(path);
    wire::WireObject obj;
    try {
        obj = wire::decode_object(bytes);
    } catch (const DecodeError& e) {
        fail(kIo, path + ": " + e.what());
    }
    if (obj.kind != want)
        fail(kIo, path + ": expected a " + wire::to_string(want) + ", found a " + wire::to_string(obj.kind));
    return obj;
}

void save(const std::string& path, const wire::WireObject& obj) { write_file(path, wire::encode_object(obj)); }

Rng make_rng(const std::string& seed_hex) {
    if (seed_hex.empty()) return Rng::from_os();
    ensure_sodium();
    std::vector<std::uint8_t> seed(seed_hex.size() / 2 + 1);
    std::size_t len = 0;
    const char* end = nullptr;
    if (seed_hex.size() % 2 != 0 ||
        sodium_hex2bin(seed.data(), seed.size(), seed_hex.data(), seed_hex.size(), nullptr, &len, &end) != 0 ||
        end != seed_hex.data() + seed_hex.size())
        fail(kUsage, "--seed must be an even-length hex string");
    seed.resize(len);
    return Rng::from_seed(seed);
}

void require_same_scheme(const wire::WireObject& a, const wire::WireObject& b) {
    if (a.scheme != b.scheme || a.ell != b.ell)
        fail(kIo, std::string("objects belong to different setups (") + wire::to_string(a.scheme) + "/" +
                      std::to_string(a.ell) + " vs " + wire::to_string(b.scheme) + "/" + std::to_string(b.ell) + ")");
}

// ---- commands ----

struct SetupArgs {
    std::string scheme, out, seed;
    std::size_t len = 0;
};

int cmd_setup(const SetupArgs& a) {
    auto rng = make_rng(a.seed);
    std::error_code ec;
    fs::create_directories(a.out, ec);
    if (ec) fail(kIo, "cannot create " + a.out + ": " + ec.message());
    const fs::path dir(a.out);
    wire::WireObject pk, sk;
    if (a.scheme == "bw") {
        const auto kp = bw::setup(a.len, rng);
        pk = wire::make_object(kp.pk);
        sk = wire::make_object(kp.sk);
    } else {
        const SchemeId id = a.scheme == "sw" ? SchemeId::SW : SchemeId::LL;
        const auto kp = id == SchemeId::SW ? sw::setup(a.len, rng) : ll::setup(a.len, rng);
        pk = wire::make_object(id, kp.pk);
        sk = wire::make_object(id, kp.sk);
    }
    save((dir / "pk.hve").string(), pk);
    save((dir / "sk.hve").string(), sk);
    return kOk;
}

struct TokenArgs {
    std::string sk, pattern, out, seed;
};

int cmd_token(const TokenArgs& a) {
    const auto sk = load(a.sk, ObjectKind::SecretKey);
    const Pattern p = wire::parse_pattern_text(a.pattern, sk.ell, sk.scheme);
    auto rng = make_rng(a.seed);
    switch (sk.scheme) {
        case SchemeId::BW: save(a.out, wire::make_object(bw::gen_token(p, std::get<bw::SecretKey>(sk.body), rng))); break;
        case SchemeId::SW:
            save(a.out, wire::make_object(sw::gen_token(p, std::get<basis3::SecretKey>(sk.body), rng)));
            break;
        case SchemeId::LL:
            save(a.out, wire::make_object(ll::gen_token(p, std::get<basis3::SecretKey>(sk.body), rng)));
            break;
    }
    return kOk;
}

struct DelegateArgs {
    std::string token, pk, value, out, seed;
    std::size_t slot = 0;
    bool wild = false;
};

int cmd_delegate(const DelegateArgs& a) {
    const auto tk_obj = load(a.token, ObjectKind::Token);
    if (tk_obj.scheme != SchemeId::SW) fail(kUsage, "delegation is only supported by SW tokens");
    const auto pk_obj = load(a.pk, ObjectKind::PublicKey);
    require_same_scheme(tk_obj, pk_obj);
    const auto& tk = std::get<sw::Token>(tk_obj.body);
    if (a.slot >= tk.pattern.size())
        fail(kUsage, "--slot " + std::to_string(a.slot) + " is out of range for length " +
                         std::to_string(tk.pattern.size()));
    if (a.wild == !a.value.empty()) fail(kUsage, "give exactly one of --value or --wild");
    std::vector<Slot> slots = tk.pattern.slots();
    slots[a.slot] = a.wild ? Slot::wild() : Slot::fixed(wire::parse_attribute(a.value));
    auto rng = make_rng(a.seed);
    save(a.out, wire::make_object(sw::delegate(Pattern(slots), tk, std::get<basis3::PublicKey>(pk_obj.body), rng)));
    return kOk;
}

struct EncryptArgs {
    std::string pk, attrs, in, out, seed;
};

int cmd_encrypt(const EncryptArgs& a) {
    const auto pk_obj = load(a.pk, ObjectKind::PublicKey);
    const AttributeVector x = wire::parse_attribute_text(a.attrs, pk_obj.ell);
    const auto msg = read_file(a.in);
    auto rng = make_rng(a.seed);
    switch (pk_obj.scheme) {
        case SchemeId::BW: save(a.out, wire::make_object(bw::encrypt(x, msg, std::get<bw::PublicKey>(pk_obj.body), rng))); break;
        case SchemeId::SW:
            save(a.out, wire::make_object(SchemeId::SW, sw::encrypt(x, msg, std::get<basis3::PublicKey>(pk_obj.body), rng)));
            break;
        case SchemeId::LL:
            save(a.out, wire::make_object(SchemeId::LL, ll::encrypt(x, msg, std::get<basis3::PublicKey>(pk_obj.body), rng)));
            break;
    }
    return kOk;
}

struct QueryArgs {
    std::string token, ct, pk, out;
};

int cmd_query(const QueryArgs& a) {
    const auto tk = load(a.token, ObjectKind::Token);
    const auto ct = load(a.ct, ObjectKind::Ciphertext);
    const auto pk = load(a.pk, ObjectKind::PublicKey);
    require_same_scheme(tk, ct);
    require_same_scheme(tk, pk);
    std::optional<std::vector<std::uint8_t>> msg;
    const Payload& c0 = tk.scheme == SchemeId::BW ? std::get<bw::Ciphertext>(ct.body).c0
                                                  : std::get<basis3::Ciphertext>(ct.body).c0;
    if (std::holds_alternative<TargetElement>(c0))
        fail(kUsage, "literal-mode ciphertexts carry a group element, not a byte payload");
    switch (tk.scheme) {
        case SchemeId::BW:
            msg = bw::query(std::get<bw::Ciphertext>(ct.body), std::get<bw::Token>(tk.body), std::get<bw::PublicKey>(pk.body));
            break;
        case SchemeId::SW:
            msg = sw::query(std::get<basis3::Ciphertext>(ct.body), std::get<sw::Token>(tk.body),
                            std::get<basis3::PublicKey>(pk.body));
            break;
        case SchemeId::LL:
            msg = ll::query(std::get<basis3::Ciphertext>(ct.body), std::get<ll::Token>(tk.body),
                            std::get<basis3::PublicKey>(pk.body));
            break;
    }
    if (!msg) {
        std::cerr << "not satisfied\n";
        return kNotSatisfied;
    }
    if (a.out.empty()) {
        std::fwrite(msg->data(), 1, msg->size(), stdout);
        if (std::fflush(stdout) != 0) fail(kIo, "cannot write to stdout");
    } else {
        write_file(a.out, *msg);
    }
    return kOk;
}

struct GgmArgs {
    std::string assumption, builtin;
    bool list = false;
};

int cmd_ggm(const GgmArgs& a) {
    if (a.list) {
        for (const auto& n : ggm::builtin_names()) std::cout << n << "\n";
        return kOk;
    }
    if (a.assumption.empty() == a.builtin.empty()) fail(kUsage, "give exactly one of --assumption or --builtin");
    ggm::Instance inst;
    if (!a.builtin.empty()) {
        try {
            inst = ggm::builtin(a.builtin);
        } catch (const ParameterError& e) {
            fail(kUsage, e.what());
        }
    } else {
        const auto text = read_file(a.assumption);
        try {
            inst = ggm::parse_instance(std::string(text.begin(), text.end()));
        } catch (const ggm::ParseError& e) {
            fail(kIo, a.assumption + ": " + e.what());
        }
    }
    const ggm::Report r = ggm::check_assumption(inst);
    std::cout << ggm::format_report(r);
    return r.generic_secure ? kOk : kInsecure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hidden vector encryption over prime-order product groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hve 1.0");

    SetupArgs setup;
    auto* s = app.add_subcommand("setup", "Generate pk.hve and sk.hve");
    s->add_option("--scheme", setup.scheme, "bw, sw or ll")->required()->check(CLI::IsMember({"bw", "sw", "ll"}));
    s->add_option("--len", setup.len, "Vector length")->required()->check(CLI::Range(1, 1 << 16));
    s->add_option("--out", setup.out, "Output directory")->required();
    s->add_option("--seed", setup.seed, "Hex seed for reproducible output");

    TokenArgs token;
    auto* t = app.add_subcommand("token", "Issue a token for a pattern");
    t->add_option("--sk", token.sk, "Secret key")->required();
    t->add_option("--pattern", token.pattern, "Comma-separated slots; * wild, ? delegatable (SW)")->required();
    t->add_option("--out", token.out, "Output token")->required();
    t->add_option("--seed", token.seed, "Hex seed for reproducible output");

    DelegateArgs deleg;
    auto* d = app.add_subcommand("delegate", "Fill one delegatable slot of an SW token");
    d->add_option("--token", deleg.token, "Token to delegate from")->required();
    d->add_option("--slot", deleg.slot, "0-based slot index")->required();
    auto* value = d->add_option("--value", deleg.value, "Attribute string for the slot");
    auto* wild = d->add_flag("--wild", deleg.wild, "Make the slot a wildcard");
    value->excludes(wild);
    d->add_option("--pk", deleg.pk, "Public key")->required();
    d->add_option("--out", deleg.out, "Output token")->required();
    d->add_option("--seed", deleg.seed, "Hex seed for reproducible output");

    EncryptArgs enc;
    auto* e = app.add_subcommand("encrypt", "Encrypt a file under an attribute vector");
    e->add_option("--pk", enc.pk, "Public key")->required();
    e->add_option("--attrs", enc.attrs, "Comma-separated attribute strings")->required();
    e->add_option("--in", enc.in, "Payload file (at most 256 bytes)")->required();
    e->add_option("--out", enc.out, "Output ciphertext")->required();
    e->add_option("--seed", enc.seed, "Hex seed for reproducible output");

    QueryArgs query;
    auto* q = app.add_subcommand("query", "Evaluate a token on a ciphertext");
    q->add_option("--token", query.token, "Token")->required();
    q->add_option("--ct", query.ct, "Ciphertext")->required();
    q->add_option("--pk", query.pk, "Public key")->required();
    q->add_option("--out", query.out, "Write the payload here instead of stdout");

    GgmArgs ggm_args;
    auto* g = app.add_subcommand("ggm-check", "Check an assumption for generic-group security");
    auto* file = g->add_option("--assumption", ggm_args.assumption, "Assumption file");
    auto* bi = g->add_option("--builtin", ggm_args.builtin, "Builtin instance name");
    file->excludes(bi);
    g->add_flag("--list", ggm_args.list, "List builtin instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int rc = app.exit(err);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*s) return cmd_setup(setup);
        if (*t) return cmd_token(token);
        if (*d) return cmd_delegate(deleg);
        if (*e) return cmd_encrypt(enc);
        if (*q) return cmd_query(query);
        if (*g) return cmd_ggm(ggm_args);
    } catch (const Failure& f) {
        std::cerr << "hve: " << f.message << "\n";
        return f.code;
    } catch (const DecodeError& err) {
        std::cerr << "hve: " << err.what() << "\n";
        return kIo;
    } catch (const Error& err) {
        // Parameter, payload, delegation and encoding errors all stem from
        // the arguments given.
        std::cerr << "hve: " << err.what() << "\n";
        return kUsage;
    } catch (const std::exception& err) {
        std::cerr << "hve: " << err.what() << "\n";
        return kIo;
    }
    return kUsage;
}
