#include <algorithm>
#include <cctype>

#include "hve/ggm.hpp"

namespace hve::ggm {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

// expr   := ['-'] term (('+' | '-') term)*
// term   := factor ('*' factor)*
// factor := atom ['^' integer]
// atom   := integer | name | '(' expr ')'
class ExprParser {
  public:
    ExprParser(std::string_view text, const std::vector<std::string>& vars, std::size_t line)
        : s_(text), vars_(vars), line_(line) {}

    FormalPoly parse() {
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        FormalPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(line_, what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    FormalPoly expr() {
        FormalPoly acc = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    FormalPoly term() {
        FormalPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    FormalPoly factor() {
        FormalPoly base = atom();
        if (!eat('^')) return base;
        skip();
        const std::string digits = number();
        if (digits.size() > 3) fail("exponent too large");
        return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }

    std::string number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    FormalPoly atom() {
        skip();
        if (pos_ == s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            FormalPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return FormalPoly::constant(mpz_class(number()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
                pos_ = start;
                fail("undeclared variable '" + name + "'");
            }
            return FormalPoly::variable(name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const std::vector<std::string>& vars_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits on commas outside parentheses.
std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        } else if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        }
    }
    if (out.size() == 1 && out[0].empty()) out.clear();
    return out;
}

bool valid_name(std::string_view n) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) return false;
    return std::all_of(n.begin(), n.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

FormalPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
    return ExprParser(text, vars, 1).parse();
}

Instance parse_instance(std::string_view text) {
    Instance inst;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.substr(0, 3) == "var" && (line.size() == 3 || std::isspace(static_cast<unsigned char>(line[3])))) {
            std::string names(line.substr(3));
            std::replace(names.begin(), names.end(), ',', ' ');
            std::size_t p = 0;
            while (p < names.size()) {
                while (p < names.size() && names[p] == ' ') ++p;
                std::size_t q = p;
                while (q < names.size() && names[q] != ' ') ++q;
                if (q > p) {
                    const std::string n = names.substr(p, q - p);
                    if (!valid_name(n)) throw ParseError(line_no, "bad variable name '" + n + "'");
                    if (std::find(inst.vars.begin(), inst.vars.end(), n) != inst.vars.end())
                        throw ParseError(line_no, "variable '" + n + "' declared twice");
                    inst.vars.push_back(n);
                }
                p = q;
            }
            continue;
        }

        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'var' or 'KEY: list'");
        const std::string_view key = trim(line.substr(0, colon));
        std::vector<FormalPoly>* dest = key == "P"     ? &inst.P
                                        : key == "R"   ? &inst.R
                                        : key == "T0"  ? &inst.T0
                                        : key == "T1"  ? &inst.T1
                                        : key == "GT0" ? &inst.GT0
                                        : key == "GT1" ? &inst.GT1
                                                       : nullptr;
        if (dest == nullptr) throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
        for (const auto item : split_list(line.substr(colon + 1))) {
            if (item.empty()) throw ParseError(line_no, "empty list entry");
            dest->push_back(ExprParser(item, inst.vars, line_no).parse());
        }
    }
    try {
        inst.validate();
    } catch (const ParameterError& e) {
        throw ParseError(line_no, e.what());
    }
    return inst;
}

namespace {

struct Builtin {
    const char* name;
    const char* text;
};

constexpr Builtin kBuiltins[] = {
    {"p3dh",
     "# parallel 3-party Diffie-Hellman; each element is a (g-part, f-part) pair\n"
     "var X A B C D Z1 Z2 Z3\n"
     "P:  1, X, A, X*A, B, X*B, A*B + X*Z1, Z1, C + X*Z2, Z2\n"
     "R:  1\n"
     "T0: A*B*C + X*Z3, Z3\n"
     "T1: D + X*Z3, Z3\n"},
    {"p3dh-swapped",
     "# P3DH with the challenge tuple in the (C, Z2) position\n"
     "var X A B C D Z1 Z2 Z3\n"
     "P:  1, X, A, X*A, B, X*B, A*B + X*Z1, Z1, A*B*C + X*Z2, Z2\n"
     "R:  1\n"
     "T0: C + X*Z3, Z3\n"
     "T1: D + X*Z3, Z3\n"},
    {"dbdh",
     "# decisional bilinear Diffie-Hellman, target-group challenge\n"
     "var A B C D\n"
     "P:   1, A, B, C\n"
     "R:   1\n"
     "GT0: A*B*C\n"
     "GT1: D\n"},
    {"ddh",
     "# DDH in the source group of a symmetric pairing (broken by pairing)\n"
     "var A B D\n"
     "P:  1, A, B\n"
     "R:  1\n"
     "T0: A*B\n"
     "T1: D\n"},
};

}  // namespace

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& b : kBuiltins) out.emplace_back(b.name);
    return out;
}

std::string builtin_text(std::string_view name) {
    for (const auto& b : kBuiltins)
        if (name == b.name) return b.text;
    throw ParameterError("unknown builtin assumption '" + std::string(name) + "'");
}

Instance builtin(std::string_view name) { return parse_instance(builtin_text(name)); }

}  // namespace hve::ggm
