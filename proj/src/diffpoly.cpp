#include "novikov/diffpoly.hpp"

#include <algorithm>

namespace novikov {

DiffMonomial DiffMonomial::var(const std::string& letter, int order) {
    DiffMonomial m;
    m.factors_.emplace_back(letter, order);
    return m;
}

DiffMonomial DiffMonomial::times(const DiffMonomial& o) const {
    DiffMonomial r;
    r.factors_.resize(factors_.size() + o.factors_.size());
    std::merge(factors_.begin(), factors_.end(), o.factors_.begin(), o.factors_.end(),
               r.factors_.begin());
    return r;
}

int DiffMonomial::total_order() const {
    int s = 0;
    for (const auto& [letter, k] : factors_)
        s += k;
    return s;
}

std::map<std::string, int> DiffMonomial::letter_multiset() const {
    std::map<std::string, int> m;
    for (const auto& [letter, k] : factors_)
        m[letter] += 1;
    return m;
}

std::string DiffMonomial::str() const {
    if (factors_.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i)
            s += "*";
        s += "u_" + factors_[i].first;
        if (factors_[i].second > 0)
            s += "^(" + std::to_string(factors_[i].second) + ")";
    }
    return s;
}

DiffPolynomial::DiffPolynomial(const DiffMonomial& m, Int coeff) { add_term(m, coeff); }

DiffPolynomial DiffPolynomial::variable(const std::string& letter, int order) {
    return DiffPolynomial(DiffMonomial::var(letter, order));
}

void DiffPolynomial::add_term(const DiffMonomial& m, const Int& coeff) {
    if (coeff == 0)
        return;
    auto it = coeffs_.find(m);
    if (it == coeffs_.end()) {
        coeffs_.emplace(m, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        coeffs_.erase(it);
}

DiffPolynomial DiffPolynomial::operator+(const DiffPolynomial& o) const {
    DiffPolynomial r = *this;
    for (const auto& [m, c] : o.coeffs_)
        r.add_term(m, c);
    return r;
}

DiffPolynomial DiffPolynomial::operator-(const DiffPolynomial& o) const {
    DiffPolynomial r = *this;
    for (const auto& [m, c] : o.coeffs_)
        r.add_term(m, -c);
    return r;
}

DiffPolynomial DiffPolynomial::operator*(const DiffPolynomial& o) const {
    DiffPolynomial r;
    for (const auto& [m1, c1] : coeffs_)
        for (const auto& [m2, c2] : o.coeffs_)
            r.add_term(m1.times(m2), c1 * c2);
    return r;
}

DiffPolynomial DiffPolynomial::derivative() const {
    DiffPolynomial r;
    for (const auto& [m, c] : coeffs_) {
        const auto& factors = m.factors();
        // Leibniz: bump each distinct factor once, weighted by its multiplicity
        for (std::size_t i = 0; i < factors.size();) {
            std::size_t j = i;
            while (j < factors.size() && factors[j] == factors[i])
                ++j;
            auto copy = factors;
            copy[i].second += 1;
            std::sort(copy.begin(), copy.end());
            DiffMonomial nm;
            for (const auto& f : copy)
                nm = nm.times(DiffMonomial::var(f.first, f.second));
            r.add_term(nm, c * Int(static_cast<long>(j - i)));
            i = j;
        }
    }
    return r;
}

std::string DiffPolynomial::str() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : coeffs_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0)
                out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || m.factor_count() == 0) {
            out += to_string(mag);
            if (m.factor_count() > 0)
                out += "*";
        }
        if (m.factor_count() > 0)
            out += m.str();
    }
    return out;
}

nlohmann::json DiffPolynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : coeffs_) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& [letter, k] : m.factors())
            factors.push_back(nlohmann::json::array({letter, k}));
        arr.push_back({{"factors", std::move(factors)}, {"coeff", to_string(c)}});
    }
    return arr;
}

DiffPolynomial expand(const Term& t) {
    if (t.is_leaf())
        return DiffPolynomial::variable(t.letter());
    return expand(t.left()).derivative() * expand(t.right());
}

std::map<DiffMonomial, Rat> expand_rational(const TermPolynomial& p) {
    std::map<DiffMonomial, Rat> out;
    for (const auto& [term, coeff] : p.terms()) {
        DiffPolynomial e = expand(term);
        for (const auto& [m, c] : e.terms()) {
            Rat& slot = out[m];
            slot += coeff * Rat(c);
            if (slot == 0)
                out.erase(m);
        }
    }
    return out;
}

DiffPolynomial transpose_letters(const DiffPolynomial& p, const std::string& a,
                                 const std::string& b) {
    DiffPolynomial r;
    for (const auto& [m, c] : p.terms()) {
        DiffMonomial nm;
        for (const auto& [letter, k] : m.factors()) {
            const std::string& swapped = letter == a ? b : (letter == b ? a : letter);
            nm = nm.times(DiffMonomial::var(swapped, k));
        }
        r.add_term(nm, c);
    }
    return r;
}

} // namespace novikov
