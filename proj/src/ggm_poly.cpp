#include <algorithm>

#include "hve/ggm.hpp"

namespace hve::ggm {

Monomial Monomial::variable(std::string name) {
    Monomial m;
    m.powers_.emplace_back(std::move(name), 1);
    m.degree_ = 1;
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.powers_.begin(), j = b.powers_.begin();
    while (i != a.powers_.end() || j != b.powers_.end()) {
        if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first)) {
            out.powers_.push_back(*i++);
        } else if (i == a.powers_.end() || j->first < i->first) {
            out.powers_.push_back(*j++);
        } else {
            out.powers_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

std::string Monomial::to_string() const {
    if (powers_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : powers_) {
        if (!s.empty()) s += '*';
        s += v;
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

bool GradedLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    // Same degree: the monomial with the larger power of the
    // alphabetically-first variable ranks higher.
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    for (std::size_t k = 0; k < std::min(pa.size(), pb.size()); ++k) {
        if (pa[k].first != pb[k].first) return pa[k].first > pb[k].first;
        if (pa[k].second != pb[k].second) return pa[k].second < pb[k].second;
    }
    return pa.size() > pb.size();
}

FormalPoly FormalPoly::constant(const mpz_class& c) {
    FormalPoly p;
    p.add_term(Monomial(), c);
    return p;
}

FormalPoly FormalPoly::variable(const std::string& name) {
    FormalPoly p;
    p.add_term(Monomial::variable(name), 1);
    return p;
}

void FormalPoly::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

unsigned FormalPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

std::vector<std::string> FormalPoly::variables() const {
    std::vector<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.powers()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

mpz_class FormalPoly::evaluate(const std::map<std::string, mpz_class>& point, const mpz_class& modulus) const {
    mpz_class acc = 0;
    for (const auto& [m, c] : terms_) {
        mpz_class t = c;
        for (const auto& [v, e] : m.powers()) {
            mpz_class pw;
            mpz_powm_ui(pw.get_mpz_t(), point.at(v).get_mpz_t(), e, modulus.get_mpz_t());
            t = t * pw % modulus;
        }
        acc = (acc + t) % modulus;
    }
    if (acc < 0) acc += modulus;
    return acc;
}

std::string FormalPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        const mpz_class mag = neg ? mpz_class(-c) : c;
        if (s.empty()) {
            if (neg) s += '-';
        } else {
            s += neg ? " - " : " + ";
        }
        if (m.degree() == 0) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + '*';
            s += m.to_string();
        }
    }
    return s;
}

FormalPoly operator+(const FormalPoly& a, const FormalPoly& b) {
    FormalPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

FormalPoly operator-(const FormalPoly& a) { return a.scaled(-1); }

FormalPoly operator-(const FormalPoly& a, const FormalPoly& b) { return a + (-b); }

FormalPoly operator*(const FormalPoly& a, const FormalPoly& b) {
    FormalPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

FormalPoly FormalPoly::scaled(const mpz_class& c) const {
    FormalPoly out;
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

FormalPoly FormalPoly::pow(unsigned e) const {
    FormalPoly out = constant(1);
    for (unsigned k = 0; k < e; ++k) out = out * *this;
    return out;
}

}  // namespace hve::ggm
