#include <doctest.h>

#include <random>

#include "ggm_oracle.hpp"
#include "hve/ggm.hpp"

using namespace hve;
using namespace hve::ggm;

namespace {

const std::vector<std::string> kVars = {"A", "B", "C", "D", "X", "Z1", "Z2", "Z3"};

FormalPoly P(std::string_view s) { return parse_poly(s, kVars); }

Instance with_p(const Instance& base, std::vector<FormalPoly> p) {
    Instance out = base;
    out.P = std::move(p);
    return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const FormalPoly a = FormalPoly::variable("A"), x = FormalPoly::variable("X");
    CHECK((P("A + X*Z1") * P("B")) == P("A*B + X*Z1*B"));
    CHECK((a + a.scaled(-1)).is_zero());
    CHECK((a - a).is_zero());
    CHECK(P("(A + X)^2") == P("A^2 + 2*A*X + X^2"));
    CHECK(P("3*A - 3*A").is_zero());
    CHECK(P("1").degree() == 0);
    CHECK(P("A*B*C + X*Z3").degree() == 3);
    CHECK(P("A*(B + C)") == P("A*B + A*C"));
    CHECK(x * a == a * x);

    // (AB + XZ1) * C expanded term by term.
    const FormalPoly lhs = P("A*B + X*Z1") * P("C");
    const FormalPoly abc = FormalPoly::variable("A") * FormalPoly::variable("B") * FormalPoly::variable("C");
    const FormalPoly xz1c = FormalPoly::variable("X") * FormalPoly::variable("Z1") * FormalPoly::variable("C");
    CHECK(lhs == abc + xz1c);
    CHECK(lhs.terms().size() == 2);
}

TEST_CASE("polynomial printing is canonical") {
    CHECK(P("X*Z3 + C*B*A").to_string() == "A*B*C + X*Z3");
    CHECK(P("2 - A^2").to_string() == "-A^2 + 2");
    CHECK(FormalPoly().to_string() == "0");
    CHECK(P("B*A") == P("A*B"));
}

TEST_CASE("evaluation") {
    const mpz_class m = 101;
    std::map<std::string, mpz_class> pt = {{"A", 3}, {"B", 5}, {"C", 0}, {"D", 1}, {"X", 7}, {"Z1", 2}, {"Z2", 0}, {"Z3", 0}};
    CHECK(P("A*B + X*Z1").evaluate(pt, m) == 29);
    CHECK(P("A - B").evaluate(pt, m) == 99);
}

TEST_CASE("source dependence") {
    const auto w = dependent_source({P("A")}, {P("1"), P("A")});
    REQUIRE(w);
    CHECK(verify_witness(*w));
    REQUIRE(w->terms.size() == 2);
    CHECK(w->terms[0].label == "T0[0]");
    CHECK(w->terms[0].coeff == 1);
    CHECK(w->terms[1].label == "P[1]");
    CHECK(w->terms[1].coeff == -1);  // A - A = 0

    const Instance p3dh = builtin("p3dh");
    CHECK_FALSE(dependent_source(p3dh.T0, p3dh.P));
    CHECK_FALSE(dependent_source(p3dh.T1, p3dh.P, 1));
}

TEST_CASE("pairing dependence on the planted instance") {
    const Instance ddh = builtin("ddh");
    CHECK_FALSE(dependent_source(ddh.T0, ddh.P));
    const auto w = dependent_pairing(ddh, 0);
    REQUIRE(w);
    CHECK(verify_witness(*w));
    const std::string text = format_witness(*w);
    CHECK(text.find("T0[0]*P[0]") != std::string::npos);
    CHECK(text.find("P[1]*P[2]") != std::string::npos);
    CHECK_FALSE(dependent_pairing(ddh, 1));
}

TEST_CASE("builtin reports") {
    const auto p3dh = check_assumption(builtin("p3dh"));
    CHECK(p3dh.generic_secure);
    CHECK(p3dh.max_degree == 6);
    CHECK(check_assumption(builtin("p3dh-swapped")).generic_secure);
    const auto dbdh = check_assumption(builtin("dbdh"));
    CHECK(dbdh.generic_secure);
    CHECK(dbdh.lines.size() == 2);
    const auto ddh = check_assumption(builtin("ddh"));
    CHECK_FALSE(ddh.generic_secure);
    CHECK(ddh.witnesses_verified);
    CHECK_FALSE(ddh.witnesses.empty());
    CHECK(format_report(ddh).find("generic_secure = false") != std::string::npos);
}

TEST_CASE("target-group challenge that is a pairing is caught") {
    Instance inst = builtin("dbdh");
    inst.GT0 = {P("A*B")};
    const auto w = dependent_target(inst, 0);
    REQUIRE(w);
    CHECK(verify_witness(*w));
    CHECK_FALSE(check_assumption(inst).generic_secure);
}

TEST_CASE("p3dh regression corpus") {
    const Instance base = builtin("p3dh");
    SUBCASE("every single deletion from P stays secure") {
        for (std::size_t k = 0; k < base.P.size(); ++k) {
            auto p = base.P;
            p.erase(p.begin() + static_cast<std::ptrdiff_t>(k));
            CAPTURE(k);
            CHECK(check_assumption(with_p(base, p)).generic_secure);
        }
    }
    SUBCASE("leaking Z3 breaks it at the source") {
        auto p = base.P;
        p.push_back(P("Z3"));
        const auto r = check_assumption(with_p(base, p));
        CHECK_FALSE(r.generic_secure);
        CHECK(r.witnesses_verified);
        CHECK(r.witnesses.front().test == TestKind::Source);
    }
    SUBCASE("leaking ABC breaks it through a pairing") {
        auto p = base.P;
        p.push_back(P("A*B*C"));
        const auto r = check_assumption(with_p(base, p));
        CHECK_FALSE(r.generic_secure);
        CHECK(r.witnesses_verified);
        CHECK_FALSE(dependent_source(base.T0, p));
        CHECK(dependent_pairing(with_p(base, p), 0));
    }
}

TEST_CASE("solver agrees with brute force on small instances") {
    std::mt19937_64 gen(77);
    int agree_source = 0, agree_pairing = 0, dependent_seen = 0, independent_seen = 0;
    for (int n = 0; n < 30; ++n) {
        const Instance inst = test::random_small_instance(gen);
        CAPTURE(n);
        const bool bs = test::oracle_dependent(test::oracle_source_columns(inst, 0));
        const auto ws = dependent_source(inst.T0, inst.P);
        if (ws) CHECK(verify_witness(*ws));
        if (bs == ws.has_value()) ++agree_source;

        const bool bp = test::oracle_dependent(test::oracle_pairing_columns(inst, 0));
        const auto wp = dependent_pairing(inst, 0);
        if (wp) CHECK(verify_witness(*wp));
        if (bp == wp.has_value()) ++agree_pairing;
        (bp ? dependent_seen : independent_seen)++;
        // A bounded witness is a real witness, so the solver must find one too.
        CHECK((!bp || wp.has_value()));
        CHECK((!bs || ws.has_value()));
    }
    CHECK(agree_source == 30);
    CHECK(agree_pairing == 30);
    CHECK(dependent_seen > 0);
    CHECK(independent_seen > 0);
}

TEST_CASE("parser") {
    const Instance inst = parse_instance(
        "# test\n"
        "var A, B\n"
        "var D\n"
        "P: 1, A,\tB   # trailing comment\n"
        "P: (A + B)*(A - B)\n"
        "T0: A*B\n"
        "T1: D\n");
    CHECK(inst.vars.size() == 3);
    CHECK(inst.P.size() == 4);
    CHECK(inst.P[3] == parse_poly("A^2 - B^2", inst.vars));
    CHECK(inst.R.empty());

    CHECK_THROWS_AS(parse_instance("var A\nP: B\nT0: A\nT1: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("var A\nQ: A\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("var A\nT0: A\nT1: A\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("var A\nT0: A, A\nT1: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("var A\nP: A +\nT0: A\nT1: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("var A A\n"), ParseError);
    CHECK_THROWS_AS(builtin("nope"), ParameterError);
    try {
        parse_instance("var A\n\nP: (A\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    for (const auto& name : builtin_names()) CHECK_NOTHROW(builtin(name));
}
