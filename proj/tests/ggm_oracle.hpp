#pragma once

// Bounded brute-force search for dependence witnesses, written against the
// definitions directly and sharing nothing with the library's solver except
// polynomial arithmetic.

#include <functional>
#include <random>
#include <vector>

#include "hve/ggm.hpp"

namespace hve::test {

struct OracleColumn {
    ggm::FormalPoly poly;
    bool distinguished;
};

inline std::vector<OracleColumn> oracle_source_columns(const ggm::Instance& inst, int b) {
    std::vector<OracleColumn> cols;
    for (const auto& t : inst.T(b)) cols.push_back({t, true});
    for (const auto& p : inst.P) cols.push_back({p, false});
    return cols;
}

inline std::vector<OracleColumn> oracle_pairing_columns(const ggm::Instance& inst, int b) {
    const auto& t = inst.T(b);
    const auto& u = inst.T(1 - b);
    std::vector<OracleColumn> cols;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i; j < t.size(); ++j) cols.push_back({t[i] * t[j], !(t[i] * t[j] == u[i] * u[j])});
    for (std::size_t i = 0; i < t.size(); ++i)
        for (const auto& p : inst.P) cols.push_back({t[i] * p, !(t[i] * p == u[i] * p)});
    for (std::size_t i = 0; i < inst.P.size(); ++i)
        for (std::size_t j = i; j < inst.P.size(); ++j) cols.push_back({inst.P[i] * inst.P[j], false});
    for (const auto& r : inst.R) cols.push_back({r, false});
    return cols;
}

/// True when some combination with coefficients in {+-1, +-2} on at most
/// max_support columns, touching a distinguished column, sums to zero.
inline bool oracle_dependent(const std::vector<OracleColumn>& cols, std::size_t max_support = 4) {
    const int coeffs[] = {1, -1, 2, -2};
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t)> choose = [&](std::size_t start) -> bool {
        if (!chosen.empty()) {
            bool touches = false;
            for (auto k : chosen) touches = touches || cols[k].distinguished;
            if (touches) {
                // Try every coefficient assignment; the first may be fixed to +1/+2.
                std::vector<int> pick(chosen.size(), 0);
                for (;;) {
                    ggm::FormalPoly sum;
                    for (std::size_t n = 0; n < chosen.size(); ++n)
                        sum = sum + cols[chosen[n]].poly.scaled(coeffs[pick[n]]);
                    if (sum.is_zero()) return true;
                    std::size_t n = 0;
                    while (n < pick.size() && ++pick[n] == 4) pick[n++] = 0;
                    if (n == pick.size()) break;
                }
            }
        }
        if (chosen.size() == max_support) return false;
        for (std::size_t k = start; k < cols.size(); ++k) {
            chosen.push_back(k);
            if (choose(k + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return choose(0);
}

/// Small random instance: at most 4 variables, degree <= 3, |P| <= 3, |T| = 1.
inline ggm::Instance random_small_instance(std::mt19937_64& gen) {
    const std::vector<std::string> pool = {"A", "B", "C", "D"};
    ggm::Instance inst;
    const std::size_t nvars = 2 + gen() % 3;
    inst.vars.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(nvars));
    auto mono = [&] {
        ggm::FormalPoly m = ggm::FormalPoly::constant(1);
        const unsigned deg = gen() % 4;
        for (unsigned d = 0; d < deg; ++d) m = m * ggm::FormalPoly::variable(inst.vars[gen() % nvars]);
        return m;
    };
    auto poly = [&] {
        ggm::FormalPoly p = mono();
        if (gen() % 2) p = p + mono().scaled(gen() % 2 ? 1 : -1);
        return p.is_zero() ? mono() + ggm::FormalPoly::constant(1) : p;
    };
    const std::size_t np = 1 + gen() % 3;
    for (std::size_t k = 0; k < np; ++k) inst.P.push_back(gen() % 3 == 0 ? ggm::FormalPoly::constant(1) : poly());
    inst.R.push_back(ggm::FormalPoly::constant(1));
    inst.T0.push_back(poly());
    do {
        inst.T1 = {poly()};
    } while (inst.T1[0] == inst.T0[0]);
    return inst;
}

}  // namespace hve::test
