// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "acceptance_cli.hpp"
#include "acceptance_ggm.hpp"
#include "hve/bw.hpp"
#include "hve/ll.hpp"
#include "hve/sw.hpp"
#include "support.hpp"

using namespace hve;

namespace {

constexpr double kCorrectnessBudgetSeconds = 120.0;
constexpr double kGgmBudgetSeconds = 10.0;
constexpr int kTrials = 100;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1. correctness game -------------------------------------------------

struct GameCount {
    int match_ok = 0, match_total = 0, reject_ok = 0, reject_total = 0;
};

template <typename Scheme>
void play(GameCount& c, std::size_t ell, bool deleg, Rng& rng) {
    const auto kp = Scheme::setup(ell, rng);
    for (int n = 0; n < kTrials; ++n) {
        const auto x = test::random_attrs(ell, rng);
        const auto msg = test::random_bytes(kDefaultMaxPayload, rng);
        const auto ct = Scheme::encrypt(x, msg, kp.pk, rng);
        const auto tk = Scheme::gen_token(test::matching_pattern(x, rng, deleg), kp.sk, rng);
        ++c.match_total;
        if (Scheme::query(ct, tk, kp.pk) == msg) ++c.match_ok;
    }
    for (int n = 0; n < kTrials; ++n) {
        const auto x = test::random_attrs(ell, rng);
        const auto msg = test::random_bytes(kDefaultMaxPayload, rng);
        const auto ct = Scheme::encrypt(x, msg, kp.pk, rng);
        const auto tk = Scheme::gen_token(test::mismatching_pattern(x, rng, deleg), kp.sk, rng);
        ++c.reject_total;
        if (!Scheme::query(ct, tk, kp.pk).has_value()) ++c.reject_ok;
    }
}

struct BwApi {
    static auto setup(std::size_t l, Rng& r) { return bw::setup(l, r); }
    static auto encrypt(const AttributeVector& x, std::span<const std::uint8_t> m, const bw::PublicKey& pk, Rng& r) {
        return bw::encrypt(x, m, pk, r);
    }
    static auto gen_token(const Pattern& p, const bw::SecretKey& sk, Rng& r) { return bw::gen_token(p, sk, r); }
    static auto query(const bw::Ciphertext& c, const bw::Token& t, const bw::PublicKey& pk) {
        return bw::query(c, t, pk);
    }
};
struct SwApi {
    static auto setup(std::size_t l, Rng& r) { return sw::setup(l, r); }
    static auto encrypt(const AttributeVector& x, std::span<const std::uint8_t> m, const sw::PublicKey& pk, Rng& r) {
        return sw::encrypt(x, m, pk, r);
    }
    static auto gen_token(const Pattern& p, const sw::SecretKey& sk, Rng& r) { return sw::gen_token(p, sk, r); }
    static auto query(const sw::Ciphertext& c, const sw::Token& t, const sw::PublicKey& pk) {
        return sw::query(c, t, pk);
    }
};
struct LlApi {
    static auto setup(std::size_t l, Rng& r) { return ll::setup(l, r); }
    static auto encrypt(const AttributeVector& x, std::span<const std::uint8_t> m, const ll::PublicKey& pk, Rng& r) {
        return ll::encrypt(x, m, pk, r);
    }
    static auto gen_token(const Pattern& p, const ll::SecretKey& sk, Rng& r) { return ll::gen_token(p, sk, r); }
    static auto query(const ll::Ciphertext& c, const ll::Token& t, const ll::PublicKey& pk) {
        return ll::query(c, t, pk);
    }
};

Outcome correctness_game() {
    auto rng = Rng::from_seed(0xC0881);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    const char* names[] = {"bw", "sw", "ll"};
    for (int s = 0; s < 3; ++s) {
        GameCount c;
        for (std::size_t ell : {1u, 2u, 4u, 8u}) {
            if (s == 0) play<BwApi>(c, ell, false, rng);
            if (s == 1) play<SwApi>(c, ell, true, rng);
            if (s == 2) play<LlApi>(c, ell, false, rng);
        }
        out.pass = out.pass && c.match_ok == c.match_total && c.reject_ok == c.reject_total;
        out.detail += std::string(names[s]) + " match " + std::to_string(c.match_ok) + "/" +
                      std::to_string(c.match_total) + " reject " + std::to_string(c.reject_ok) + "/" +
                      std::to_string(c.reject_total) + "; ";
    }
    const double secs = seconds_since(t0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs (budget %.0fs)", secs, kCorrectnessBudgetSeconds);
    out.detail += buf;
    out.pass = out.pass && secs < kCorrectnessBudgetSeconds;
    return out;
}

// ---- 2. telescoping ---------------------------------------------------------

template <typename Ns>
int telescoping_hits(std::size_t ell, bool deleg, Rng& rng) {
    typename Ns::SetupTrace st;
    const auto kp = Ns::setup(ell, rng, st);
    const TargetElement egg = pair(generator(), generator());
    int ok = 0;
    for (int n = 0; n < kTrials; ++n) {
        const auto x = test::random_attrs(ell, rng);
        typename Ns::EncryptTrace et;
        const auto ct = Ns::encrypt(x, std::span<const std::uint8_t>{}, kp.pk, rng, et);
        const auto tk = Ns::gen_token(test::matching_pattern(x, rng, deleg), kp.sk, rng);
        const TargetElement d = Ns::pairing_product(ct, tk);
        if (d == target_exp(kp.pk.omega, et.t) && d == target_exp(egg, st.v_prime * st.alpha * et.t)) ++ok;
    }
    return ok;
}

struct BwNs {
    using SetupTrace = bw::SetupTrace;
    using EncryptTrace = bw::EncryptTrace;
    static auto setup(std::size_t l, Rng& r, SetupTrace& t) { return bw::setup(l, r, t); }
    static auto encrypt(const AttributeVector& x, std::span<const std::uint8_t> m, const bw::PublicKey& pk, Rng& r,
                        EncryptTrace& t) {
        return bw::encrypt(x, m, pk, r, t);
    }
    static auto gen_token(const Pattern& p, const bw::SecretKey& sk, Rng& r) { return bw::gen_token(p, sk, r); }
    static auto pairing_product(const bw::Ciphertext& c, const bw::Token& t) { return bw::pairing_product(c, t); }
};
struct SwNs {
    using SetupTrace = sw::SetupTrace;
    using EncryptTrace = sw::EncryptTrace;
    static auto setup(std::size_t l, Rng& r, SetupTrace& t) { return sw::setup(l, r, t); }
    static auto encrypt(const AttributeVector& x, std::span<const std::uint8_t> m, const sw::PublicKey& pk, Rng& r,
                        EncryptTrace& t) {
        return sw::encrypt(x, m, pk, r, t);
    }
    static auto gen_token(const Pattern& p, const sw::SecretKey& sk, Rng& r) { return sw::gen_token(p, sk, r); }
    static auto pairing_product(const sw::Ciphertext& c, const sw::Token& t) { return sw::pairing_product(c, t); }
};
struct LlNs {
    using SetupTrace = ll::SetupTrace;
    using EncryptTrace = ll::EncryptTrace;
    static auto setup(std::size_t l, Rng& r, SetupTrace& t) { return ll::setup(l, r, t); }
    static auto encrypt(const AttributeVector& x, std::span<const std::uint8_t> m, const ll::PublicKey& pk, Rng& r,
                        EncryptTrace& t) {
        return ll::encrypt(x, m, pk, r, t);
    }
    static auto gen_token(const Pattern& p, const ll::SecretKey& sk, Rng& r) { return ll::gen_token(p, sk, r); }
    static auto pairing_product(const ll::Ciphertext& c, const ll::Token& t) { return ll::pairing_product(c, t); }
};

Outcome telescoping() {
    auto rng = Rng::from_seed(0x7E1E);
    const int b = telescoping_hits<BwNs>(4, false, rng);
    const int s = telescoping_hits<SwNs>(4, true, rng);
    const int l = telescoping_hits<LlNs>(4, false, rng);
    return {b == kTrials && s == kTrials && l == kTrials,
            "bw " + std::to_string(b) + "/100, sw " + std::to_string(s) + "/100, ll " + std::to_string(l) + "/100"};
}

// ---- 3. basis orthogonality ------------------------------------------------

Outcome orthogonality() {
    auto rng = Rng::from_seed(0xB0515);
    const TargetElement egg = pair(generator(), generator());
    int ok2 = 0, ok3 = 0;
    for (int n = 0; n < kTrials; ++n) {
        const Basis2 b = gen_basis_2(rng);
        if (is_orthogonal(b.b2, b.b12) && vec_pair(b.b11, b.b12) == egg) ++ok2;
        const Basis3 c = gen_basis_3(rng);
        if (is_orthogonal(c.b12, c.b2) && is_orthogonal(c.b11, c.b3) && is_orthogonal(c.b2, c.b3) &&
            vec_pair(c.b11, c.b12) == egg)
            ++ok3;
    }
    return {ok2 == kTrials && ok3 == kTrials,
            "Basis2 " + std::to_string(ok2) + "/100, Basis3 " + std::to_string(ok3) + "/100"};
}

// ---- 4. delegation soundness ------------------------------------------------

Outcome delegation() {
    constexpr int kChains = 50, kCiphertexts = 20;
    auto rng = Rng::from_seed(0xDE1E);
    int agree = 0, total = 0, truthful = 0;
    const std::size_t ell = 4;
    const auto kp = sw::setup(ell, rng);
    for (int c = 0; c < kChains; ++c) {
        // Root: a reference vector xr, at least three delegatable slots.
        const auto xr = test::random_attrs(ell, rng);
        std::vector<Slot> slots(ell, Slot::deleg());
        const std::size_t keep = rng.uniform(ell);
        slots[keep] = rng.uniform(2) ? Slot::wild() : Slot::fixed(xr[keep]);
        Pattern pattern(slots);
        sw::Token tk = sw::gen_token(pattern, kp.sk, rng);

        const std::size_t steps = 1 + rng.uniform(3);
        for (std::size_t s = 0; s < steps; ++s) {
            const auto open = pattern.deleg_indexes();
            const std::size_t j = open[rng.uniform(open.size())];
            auto next = pattern.slots();
            const auto pick = rng.uniform(3);
            next[j] = pick == 0 ? Slot::wild()
                    : pick == 1 ? Slot::fixed(xr[j])
                                : Slot::fixed(random_scalar(rng));
            pattern = Pattern(next);
            tk = sw::delegate(pattern, tk, kp.pk, rng);
        }
        const sw::Token fresh = sw::gen_token(pattern, kp.sk, rng);

        for (int n = 0; n < kCiphertexts; ++n) {
            auto x = test::random_attrs(ell, rng);
            // Half the ciphertexts satisfy the final pattern.
            if (n % 2 == 0)
                for (std::size_t i = 0; i < ell; ++i)
                    if (pattern[i].kind == SlotKind::Fixed) x[i] = pattern[i].value;
            const auto msg = test::random_bytes(32, rng);
            const auto ct = sw::encrypt(x, msg, kp.pk, rng);
            const auto a = sw::query(ct, tk, kp.pk);
            const auto b = sw::query(ct, fresh, kp.pk);
            ++total;
            if (a == b) ++agree;
            if ((a == msg) == pattern.matches(x)) ++truthful;
        }
    }
    return {agree == total && truthful == total && total == kChains * kCiphertexts,
            std::to_string(agree) + "/" + std::to_string(total) + " delegated/fresh agreements, " +
                std::to_string(truthful) + "/" + std::to_string(total) + " agree with the predicate"};
}

// ---- 5. pairing counts ------------------------------------------------------

Outcome pairing_counts() {
    auto rng = Rng::from_seed(0xC0C0);
    bool ok = true;
    std::string detail = "ll vec_pairs:";
    for (std::size_t ell : {1u, 4u, 16u}) {
        const auto kp = ll::setup(ell, rng);
        const auto x = test::random_attrs(ell, rng);
        const auto ct = ll::encrypt(x, {}, kp.pk, rng);
        const auto tk = ll::gen_token(test::matching_pattern(x, rng), kp.sk, rng);
        instrumentation::reset_counters();
        ok = ok && ll::query(ct, tk, kp.pk).has_value();
        const auto n = instrumentation::counters().vec_pairs;
        ok = ok && n == 4;
        detail += " l=" + std::to_string(ell) + ":" + std::to_string(n);
    }
    detail += "; bw vec_pairs (got/1+2|S|):";
    for (std::size_t ell : {1u, 4u, 16u}) {
        const auto kp = bw::setup(ell, rng);
        const auto x = test::random_attrs(ell, rng);
        const auto ct = bw::encrypt(x, {}, kp.pk, rng);
        const Pattern p = test::matching_pattern(x, rng);
        const auto tk = bw::gen_token(p, kp.sk, rng);
        instrumentation::reset_counters();
        ok = ok && bw::query(ct, tk, kp.pk).has_value();
        const auto n = instrumentation::counters().vec_pairs;
        const auto want = 1 + 2 * p.fixed_indexes().size();
        ok = ok && n == want;
        detail += " " + std::to_string(n) + "/" + std::to_string(want);
    }
    return {ok, detail};
}

// ---- 6, 7 live in their own headers ----------------------------------------

Outcome ggm_checker() {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = acceptance::ggm_criterion();
    const double secs = seconds_since(t0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "; %.2fs (budget %.0fs)", secs, kGgmBudgetSeconds);
    return {r.pass && secs < kGgmBudgetSeconds, r.detail + buf};
}

Outcome cli() {
    auto r = acceptance::cli_criterion();
    return {r.pass, r.detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"1 correctness game", correctness_game},
        {"2 telescoping identities", telescoping},
        {"3 basis orthogonality", orthogonality},
        {"4 delegation soundness", delegation},
        {"5 constant pairing count", pairing_counts},
        {"6 ggm checker", ggm_checker},
        {"7 wire/cli pipeline", cli},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
