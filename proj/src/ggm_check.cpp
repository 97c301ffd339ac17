#include <algorithm>
#include <random>

#include "hve/ggm.hpp"

namespace hve::ggm {

namespace {

struct Column {
    std::string label;
    FormalPoly poly;
    bool distinguished;
};

std::string idx(std::string_view name, std::size_t i) { return std::string(name) + "[" + std::to_string(i) + "]"; }

// Finds integer c, not all zero on distinguished columns, with sum c_k col_k = 0.
// Null space from the reduced row echelon form over Q; among basis vectors
// touching a distinguished column the one with the smallest support wins.
std::optional<std::vector<mpz_class>> find_relation(const std::vector<Column>& cols) {
    std::map<Monomial, std::size_t, GradedLess> rows;
    for (const auto& c : cols)
        for (const auto& [m, v] : c.poly.terms()) rows.emplace(m, 0);
    std::size_t r = 0;
    for (auto& [m, i] : rows) i = r++;

    const std::size_t n = cols.size();
    std::vector<std::vector<mpq_class>> a(rows.size(), std::vector<mpq_class>(n));
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& [m, v] : cols[k].poly.terms()) a[rows.at(m)][k] = v;

    std::vector<std::ptrdiff_t> pivot_row_of(n, -1);
    std::size_t prow = 0;
    for (std::size_t k = 0; k < n && prow < a.size(); ++k) {
        std::size_t sel = prow;
        while (sel < a.size() && sgn(a[sel][k]) == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[sel], a[prow]);
        const mpq_class inv = 1 / a[prow][k];
        for (std::size_t c = k; c < n; ++c)
            if (sgn(a[prow][c]) != 0) a[prow][c] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == prow || sgn(a[i][k]) == 0) continue;
            const mpq_class f = a[i][k];
            for (std::size_t c = k; c < n; ++c)
                if (sgn(a[prow][c]) != 0) a[i][c] -= f * a[prow][c];
        }
        pivot_row_of[k] = static_cast<std::ptrdiff_t>(prow++);
    }

    std::optional<std::vector<mpq_class>> best;
    std::size_t best_support = n + 1;
    for (std::size_t f = 0; f < n; ++f) {
        if (pivot_row_of[f] >= 0) continue;
        std::vector<mpq_class> v(n);
        v[f] = 1;
        for (std::size_t k = 0; k < n; ++k)
            if (pivot_row_of[k] >= 0) v[k] = -a[static_cast<std::size_t>(pivot_row_of[k])][f];
        bool hits = false;
        std::size_t support = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (sgn(v[k]) == 0) continue;
            ++support;
            hits = hits || cols[k].distinguished;
        }
        if (hits && support < best_support) {
            best = std::move(v);
            best_support = support;
        }
    }
    if (!best) return std::nullopt;

    mpz_class den = 1, num = 0;
    for (const auto& q : *best)
        if (sgn(q) != 0) den = lcm(den, mpz_class(q.get_den()));
    std::vector<mpz_class> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = mpz_class((*best)[k] * den);
        num = gcd(num, out[k]);
    }
    for (auto& c : out) c /= num;
    // Normalise the sign so the first distinguished coefficient is positive.
    for (std::size_t k = 0; k < n; ++k) {
        if (!cols[k].distinguished || out[k] == 0) continue;
        if (out[k] < 0)
            for (auto& c : out) c = -c;
        break;
    }
    return out;
}

std::optional<Witness> solve(TestKind kind, int b, const std::vector<Column>& cols) {
    const auto rel = find_relation(cols);
    if (!rel) return std::nullopt;
    Witness w{kind, b, {}};
    for (std::size_t k = 0; k < cols.size(); ++k)
        if ((*rel)[k] != 0) w.terms.push_back({(*rel)[k], cols[k].label, cols[k].poly, cols[k].distinguished});
    return w;
}

// Every product an adversary can form in the target group for challenge b,
// flagged by whether its value differs between the two worlds.
std::vector<Column> target_columns(const Instance& inst, int b, bool source_products_distinguished) {
    const auto& t = inst.T(b);
    const auto& u = inst.T(1 - b);
    const std::string tn = "T" + std::to_string(b);
    std::vector<Column> cols;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i; j < t.size(); ++j)
            cols.push_back({idx(tn, i) + "*" + idx(tn, j), t[i] * t[j],
                            source_products_distinguished && !(t[i] * t[j] == u[i] * u[j])});
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < inst.P.size(); ++j)
            cols.push_back({idx(tn, i) + "*" + idx("P", j), t[i] * inst.P[j],
                            source_products_distinguished && !(t[i] * inst.P[j] == u[i] * inst.P[j])});
    for (std::size_t i = 0; i < inst.P.size(); ++i)
        for (std::size_t j = i; j < inst.P.size(); ++j)
            cols.push_back({idx("P", i) + "*" + idx("P", j), inst.P[i] * inst.P[j], false});
    for (std::size_t i = 0; i < inst.R.size(); ++i) cols.push_back({idx("R", i), inst.R[i], false});
    const auto& g = inst.GT(b);
    const auto& h = inst.GT(1 - b);
    for (std::size_t i = 0; i < g.size(); ++i)
        cols.push_back({idx("GT" + std::to_string(b), i), g[i], !(g[i] == h[i])});
    return cols;
}

unsigned max_deg(const std::vector<FormalPoly>& v) {
    unsigned d = 0;
    for (const auto& p : v) d = std::max(d, p.degree());
    return d;
}

}  // namespace

std::string_view to_string(TestKind k) {
    switch (k) {
        case TestKind::Source: return "source";
        case TestKind::Pairing: return "pairing";
        case TestKind::Target: return "target";
    }
    return "?";
}

void Instance::validate() const {
    if (T0.size() != T1.size()) throw ParameterError("T0 and T1 differ in length");
    if (GT0.size() != GT1.size()) throw ParameterError("GT0 and GT1 differ in length");
    bool differs = false;
    for (std::size_t i = 0; i < T0.size(); ++i) differs = differs || !(T0[i] == T1[i]);
    for (std::size_t i = 0; i < GT0.size(); ++i) differs = differs || !(GT0[i] == GT1[i]);
    if (!differs) throw ParameterError("the two challenges are identical");
}

bool verify_witness(const Witness& w) {
    bool touches = false;
    FormalPoly sum;
    for (const auto& t : w.terms) {
        touches = touches || (t.distinguished && t.coeff != 0);
        sum = sum + t.poly.scaled(t.coeff);
    }
    if (!touches || !sum.is_zero()) return false;

    std::vector<std::string> vars;
    for (const auto& t : w.terms)
        for (auto& v : t.poly.variables()) vars.push_back(v);
    const mpz_class modulus = (mpz_class(1) << 127) - 1;
    std::mt19937_64 gen(0x6767u);
    for (int trial = 0; trial < 8; ++trial) {
        std::map<std::string, mpz_class> point;
        for (const auto& v : vars) {
            mpz_class x = 0;
            for (int k = 0; k < 2; ++k) x = (x << 64) + mpz_class(std::to_string(gen()));
            point[v] = x % modulus;
        }
        mpz_class acc = 0;
        for (const auto& t : w.terms) acc += t.coeff * t.poly.evaluate(point, modulus);
        if (acc % modulus != 0) return false;
    }
    return true;
}

std::optional<Witness> dependent_source(const std::vector<FormalPoly>& T, const std::vector<FormalPoly>& P,
                                        int b) {
    std::vector<Column> cols;
    const std::string tn = "T" + std::to_string(b);
    for (std::size_t i = 0; i < T.size(); ++i) cols.push_back({idx(tn, i), T[i], true});
    for (std::size_t j = 0; j < P.size(); ++j) cols.push_back({idx("P", j), -P[j], false});
    auto w = solve(TestKind::Source, b, cols);
    if (w)
        for (auto& t : w->terms)
            if (!t.distinguished) {
                // Keep the original P polynomial in the report; the sum is unchanged.
                t.poly = -t.poly;
                t.coeff = -t.coeff;
            }
    return w;
}

std::optional<Witness> dependent_pairing(const Instance& inst, int b) {
    return solve(TestKind::Pairing, b, target_columns(inst, b, true));
}

std::optional<Witness> dependent_target(const Instance& inst, int b) {
    return solve(TestKind::Target, b, target_columns(inst, b, false));
}

Report check_assumption(const Instance& inst) {
    inst.validate();
    Report rep;
    rep.max_degree = std::max({2 * max_deg(inst.P), 2 * max_deg(inst.T0), 2 * max_deg(inst.T1), max_deg(inst.R),
                               max_deg(inst.GT0), max_deg(inst.GT1)});
    auto record = [&rep](TestKind k, int b, std::optional<Witness> w) {
        std::string line = std::string(to_string(k)) + " test, b=" + std::to_string(b) + ": ";
        if (!w) {
            rep.lines.push_back(line + "independent");
            return;
        }
        const bool ok = verify_witness(*w);
        rep.witnesses_verified = rep.witnesses_verified && ok;
        rep.generic_secure = false;
        rep.lines.push_back(line + "DEPENDENT" + (ok ? " (witness verified)" : " (witness FAILED verification)"));
        rep.witnesses.push_back(std::move(*w));
    };
    for (int b = 0; b < 2; ++b) {
        if (!inst.T0.empty()) {
            record(TestKind::Source, b, dependent_source(inst.T(b), inst.P, b));
            record(TestKind::Pairing, b, dependent_pairing(inst, b));
        }
        if (!inst.GT0.empty()) record(TestKind::Target, b, dependent_target(inst, b));
    }
    return rep;
}

std::string format_witness(const Witness& w) {
    std::string lhs, rhs;
    auto append = [](std::string& side, const WitnessTerm& t, bool negate) {
        const mpz_class c = negate ? mpz_class(-t.coeff) : t.coeff;
        const bool neg = c < 0;
        const mpz_class mag = neg ? mpz_class(-c) : c;
        if (side.empty())
            side += neg ? "-" : "";
        else
            side += neg ? " - " : " + ";
        if (mag != 1) side += mag.get_str() + "*";
        side += t.label;
    };
    // Printed as (challenge-dependent side) = (everything else).
    for (const auto& t : w.terms) {
        if (t.distinguished)
            append(lhs, t, false);
        else
            append(rhs, t, true);
    }
    std::string s = std::string(to_string(w.test)) + " relation, b=" + std::to_string(w.b) + ":\n  " + lhs +
                    " = " + (rhs.empty() ? "0" : rhs) + "\n";
    for (const auto& t : w.terms) s += "  " + t.label + " = " + t.poly.to_string() + "\n";
    return s;
}

std::string format_report(const Report& r) {
    std::string s;
    for (const auto& l : r.lines) s += l + "\n";
    s += "max degree t = " + std::to_string(r.max_degree) + "\n";
    for (const auto& w : r.witnesses) s += format_witness(w);
    s += std::string("generic_secure = ") + (r.generic_secure ? "true" : "false") + "\n";
    return s;
}

}  // namespace hve::ggm
