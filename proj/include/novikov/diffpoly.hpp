#ifndef NOVIKOV_DIFFPOLY_HPP
#define NOVIKOV_DIFFPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "novikov/numbers.hpp"
#include "novikov/term.hpp"

namespace novikov {

/*
 * Commutative product of derivative factors u_x^(k): a sorted multiset of
 * (letter, derivative order) pairs. The empty monomial is the unit.
 */
class DiffMonomial {
public:
    DiffMonomial() = default;

    static DiffMonomial var(const std::string& letter, int order = 0);

    DiffMonomial times(const DiffMonomial& o) const;

    const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }
    std::size_t factor_count() const { return factors_.size(); }

    int total_order() const;
    std::map<std::string, int> letter_multiset() const;

    std::string str() const;

    bool operator==(const DiffMonomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const DiffMonomial& o) const { return !(*this == o); }
    bool operator<(const DiffMonomial& o) const { return factors_ < o.factors_; }

private:
    std::vector<std::pair<std::string, int>> factors_; // sorted, repeats allowed
};

/*
 * Exact-integer linear combination of differential monomials. Supports the
 * ring operations and the derivation that raises one derivative order per
 * Leibniz term.
 */
class DiffPolynomial {
public:
    DiffPolynomial() = default;
    explicit DiffPolynomial(const DiffMonomial& m, Int coeff = 1);

    static DiffPolynomial variable(const std::string& letter, int order = 0);

    void add_term(const DiffMonomial& m, const Int& coeff);

    DiffPolynomial operator+(const DiffPolynomial& o) const;
    DiffPolynomial operator-(const DiffPolynomial& o) const;
    DiffPolynomial operator*(const DiffPolynomial& o) const;

    DiffPolynomial derivative() const;

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }
    const std::map<DiffMonomial, Int>& terms() const { return coeffs_; }

    std::string str() const;
    nlohmann::json to_json() const;

    bool operator==(const DiffPolynomial& o) const { return coeffs_ == o.coeffs_; }

private:
    std::map<DiffMonomial, Int> coeffs_;
};

/*
 * The realization of a term in differential indeterminates: a leaf x maps
 * to u_x and a product l o r maps to derivative(expand(l)) * expand(r).
 */
DiffPolynomial expand(const Term& t);

// expansion of a rational combination of terms
std::map<DiffMonomial, Rat> expand_rational(const TermPolynomial& p);

// swap two letters in every monomial
DiffPolynomial transpose_letters(const DiffPolynomial& p, const std::string& a,
                                 const std::string& b);

} // namespace novikov

#endif // NOVIKOV_DIFFPOLY_HPP
