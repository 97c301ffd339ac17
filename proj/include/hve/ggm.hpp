#pragma once

// Symbolic generic-group analysis of decisional assumptions.
//
// Group elements are formal polynomials in the hidden exponents. An instance
// gives the adversary source elements P and target elements R, plus a
// challenge that is T0 or T1 (source group) and/or GT0 or GT1 (target group).
// The assumption is generically secure when no challenge can be recognised:
//
//   source:  no sum a_i T_b,i = sum c_j P_j with some a_i != 0
//   pairing: no linear relation among the pairwise products
//            {T_b,i T_b,j}, {T_b,i P_j}, {P_i P_j}, R
//            that puts weight on a product whose value depends on b
//            (T0_i T0_j != T1_i T1_j or T0_i P_j != T1_i P_j)
//   target:  no relation that puts weight on a b-dependent GT_b entry,
//            against all the products above, R and the shared GT entries
// A b-dependent GT entry also counts as distinguished in the pairing test.
//
// Relations are found by exact linear algebra over Q. A rational witness
// clears to a Z_p witness for every prime p not dividing its denominators;
// independence over Q implies independence mod p for all but finitely many
// p.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hve/errors.hpp"

namespace hve::ggm {

/// Product of variables with positive exponents, sorted by variable name.
class Monomial {
  public:
    Monomial() = default;  // the constant monomial 1
    static Monomial variable(std::string name);

    unsigned degree() const { return degree_; }
    const std::vector<std::pair<std::string, unsigned>>& powers() const { return powers_; }
    std::string to_string() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

  private:
    std::vector<std::pair<std::string, unsigned>> powers_;
    unsigned degree_ = 0;
};

/// Graded order: total degree first, then lexicographic by variable name.
struct GradedLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Integer-coefficient polynomial; zero coefficients are never stored.
class FormalPoly {
  public:
    using Terms = std::map<Monomial, mpz_class, GradedLess>;

    FormalPoly() = default;
    static FormalPoly constant(const mpz_class& c);
    static FormalPoly variable(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const;
    const Terms& terms() const { return terms_; }
    std::vector<std::string> variables() const;

    /// Value at the given point, reduced mod modulus (modulus > 0).
    mpz_class evaluate(const std::map<std::string, mpz_class>& point, const mpz_class& modulus) const;

    /// Highest monomial first, e.g. "A*B*C + X*Z3"; zero prints as "0".
    std::string to_string() const;

    friend FormalPoly operator+(const FormalPoly& a, const FormalPoly& b);
    friend FormalPoly operator-(const FormalPoly& a, const FormalPoly& b);
    friend FormalPoly operator-(const FormalPoly& a);
    friend FormalPoly operator*(const FormalPoly& a, const FormalPoly& b);
    friend bool operator==(const FormalPoly& a, const FormalPoly& b) = default;

    FormalPoly scaled(const mpz_class& c) const;
    FormalPoly pow(unsigned e) const;

  private:
    void add_term(const Monomial& m, const mpz_class& c);
    Terms terms_;
};

struct Instance {
    std::vector<std::string> vars;
    std::vector<FormalPoly> P, R;
    std::vector<FormalPoly> T0, T1;    // source-group challenge
    std::vector<FormalPoly> GT0, GT1;  // target-group challenge

    /// Throws ParameterError on unequal challenge lengths or when no position
    /// differs between the two challenges. Individual positions may agree.
    void validate() const;
    const std::vector<FormalPoly>& T(int b) const { return b == 0 ? T0 : T1; }
    const std::vector<FormalPoly>& GT(int b) const { return b == 0 ? GT0 : GT1; }
};

enum class TestKind { Source, Pairing, Target };
std::string_view to_string(TestKind k);

/// One term of a linear relation: coefficient * (polynomial named by label).
struct WitnessTerm {
    mpz_class coeff;
    std::string label;  // e.g. "T0[1]*P[3]"
    FormalPoly poly;
    bool distinguished = false;  // part of the challenge-dependent side
};

/// sum coeff_k * poly_k == 0 with at least one distinguished coeff nonzero.
struct Witness {
    TestKind test = TestKind::Source;
    int b = 0;
    std::vector<WitnessTerm> terms;
};

/// Checks the identity by expansion and by substitution at random points.
bool verify_witness(const Witness& w);

std::optional<Witness> dependent_source(const std::vector<FormalPoly>& T, const std::vector<FormalPoly>& P,
                                        int b = 0);
std::optional<Witness> dependent_pairing(const Instance& inst, int b);
std::optional<Witness> dependent_target(const Instance& inst, int b);

struct Report {
    bool generic_secure = true;
    /// Largest degree an adversary can reach: twice the largest source
    /// degree, or the largest target-side degree if higher.
    unsigned max_degree = 0;
    std::vector<Witness> witnesses;
    bool witnesses_verified = true;
    std::vector<std::string> lines;  // human-readable per-test results
};

Report check_assumption(const Instance& inst);
std::string format_report(const Report& r);
std::string format_witness(const Witness& w);

// ---- text format --------------------------------------------------------------
//
//   # comment
//   var X A B C D Z1 Z2 Z3
//   P:  1, X, A, X*A, B, X*B, A*B + X*Z1, Z1, C + X*Z2, Z2
//   R:  1
//   T0: A*B*C + X*Z3, Z3
//   T1: D + X*Z3, Z3
//   GT0: ...            (target-group challenge, optional)
//
// Expressions use + - * ^, parentheses and integer literals. Repeated keys
// append. Every variable must be declared.

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

Instance parse_instance(std::string_view text);
/// Parses a single expression over the given variables.
FormalPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// "p3dh", "p3dh-swapped", "dbdh", "ddh".
std::vector<std::string> builtin_names();
/// Throws ParameterError for an unknown name.
Instance builtin(std::string_view name);
std::string builtin_text(std::string_view name);

}  // namespace hve::ggm
