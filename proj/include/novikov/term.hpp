#ifndef NOVIKOV_TERM_HPP
#define NOVIKOV_TERM_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "novikov/alphabet.hpp"
#include "novikov/numbers.hpp"

namespace novikov {

/*
 * Nonassociative monomial over an alphabet: a binary tree whose leaves are
 * letters and whose inner nodes mean "left o right". Immutable; copies are
 * cheap (shared subtrees). The canonical text form is fully parenthesized,
 * e.g. "(a*(b*c))", and doubles as the canonical total order on terms.
 */
class Term {
public:
    static Term leaf(const std::string& letter);
    static Term product(const Term& left, const Term& right);

    bool is_leaf() const { return node_->left == nullptr; }
    const std::string& letter() const; // leaf only
    Term left() const;                 // node only
    Term right() const;                // node only

    int degree() const { return node_->degree; }

    // canonical fully parenthesized text
    const std::string& str() const { return node_->text; }

    // letter -> number of occurrences among the leaves
    std::map<std::string, int> letter_multiset() const;

    // true iff no letter occurs twice among the leaves
    bool is_polylinear() const;

    bool operator==(const Term& o) const { return str() == o.str(); }
    bool operator!=(const Term& o) const { return !(*this == o); }
    bool operator<(const Term& o) const { return str() < o.str(); }

private:
    struct Node {
        std::string leaf_letter;
        std::shared_ptr<const Node> left, right;
        int degree;
        std::string text;
    };

    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

// Grammar: term := letter | "(" term "*" term ")". Whitespace is
// insignificant; "∘" is accepted as an alias for "*". Every product
// carries its own parentheses, including the outermost one.
Term parse_term(const std::string& text, const Alphabet& alphabet);

inline std::string print_term(const Term& t) { return t.str(); }

// nested-array encoding: "a" or [left, right]
nlohmann::json term_to_json(const Term& t);
Term term_from_json(const nlohmann::json& j, const Alphabet& alphabet);

/*
 * Finite linear combination of same-multidegree terms with exact rational
 * coefficients. Zero coefficients are never stored; keys are ordered by
 * their canonical text.
 */
class TermPolynomial {
public:
    TermPolynomial() = default;
    explicit TermPolynomial(const Term& t, const Rat& coeff = Rat(1));

    void add(const Term& t, const Rat& coeff);

    TermPolynomial operator+(const TermPolynomial& o) const;
    TermPolynomial operator-(const TermPolynomial& o) const;
    TermPolynomial operator*(const Rat& scalar) const;

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }
    const std::map<Term, Rat>& terms() const { return coeffs_; }

    // multidegree shared by all keys; empty map for the zero polynomial
    std::map<std::string, int> letter_multiset() const;

    std::string str() const;

private:
    std::map<Term, Rat> coeffs_;
};

// (a,b,c) = a o (b o c) - (a o b) o c
TermPolynomial associator(const Term& a, const Term& b, const Term& c);

/*
 * The two defining identities as defect polynomials:
 *   first  = (a,b,c) - (a,c,b)
 *   second = a o (b o c) - b o (a o c)
 * Both vanish in any Novikov algebra.
 */
std::pair<TermPolynomial, TermPolynomial> novikov_identity_defects(const Term& a, const Term& b,
                                                                   const Term& c);

// Every product of the first n alphabet letters, each used exactly once:
// all binary tree shapes times all letter orders; n! * Catalan(n-1) terms.
std::vector<Term> enumerate_all_polylinear_terms(int n, const Alphabet& alphabet);

} // namespace novikov

#endif // NOVIKOV_TERM_HPP
