#pragma once

#include <random>
#include <string>

#include "ggm_oracle.hpp"
#include "hve/ggm.hpp"

namespace acceptance {

struct Result {
    bool pass;
    std::string detail;
};

inline Result ggm_criterion() {
    using namespace hve::ggm;
    const Report p3dh = check_assumption(builtin("p3dh"));
    const Report ddh = check_assumption(builtin("ddh"));
    bool verified = p3dh.witnesses_verified && ddh.witnesses_verified;
    for (const auto& w : ddh.witnesses) verified = verified && verify_witness(w);

    std::mt19937_64 gen(2024);
    int agree = 0, dependent = 0;
    constexpr int kInstances = 24;
    for (int n = 0; n < kInstances; ++n) {
        const Instance inst = hve::test::random_small_instance(gen);
        const bool brute = hve::test::oracle_dependent(hve::test::oracle_source_columns(inst, 0)) ||
                           hve::test::oracle_dependent(hve::test::oracle_pairing_columns(inst, 0));
        const auto ws = dependent_source(inst.T0, inst.P);
        const auto wp = dependent_pairing(inst, 0);
        if (ws) verified = verified && verify_witness(*ws);
        if (wp) verified = verified && verify_witness(*wp);
        const bool solver = ws.has_value() || wp.has_value();
        agree += brute == solver;
        dependent += brute;
    }

    const bool pass = p3dh.generic_secure && !ddh.generic_secure && !ddh.witnesses.empty() && verified &&
                      agree == kInstances;
    return {pass, std::string("p3dh secure=") + (p3dh.generic_secure ? "yes" : "no") +
                      ", ddh secure=" + (ddh.generic_secure ? "yes" : "no") + " (" +
                      std::to_string(ddh.witnesses.size()) + " witnesses), all verified=" +
                      (verified ? "yes" : "no") + ", brute agreement " + std::to_string(agree) + "/" +
                      std::to_string(kInstances) + " (" + std::to_string(dependent) + " dependent)"};
}

}  // namespace acceptance
