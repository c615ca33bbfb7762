#ifndef NOVIKOV_REALIZATION_HPP
#define NOVIKOV_REALIZATION_HPP

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "novikov/alphabet.hpp"
#include "novikov/basis.hpp"
#include "novikov/diffpoly.hpp"
#include "novikov/linalg.hpp"
#include "novikov/term.hpp"

namespace novikov {

/*
 * Column indexing for the polylinear multidegree of degree n: monomials in
 * which each of the n letters occurs exactly once and the derivative orders
 * sum to n-1. Columns are ordered by the derivative-order vector
 * (k_1,...,k_n), lexicographically.
 */
struct PolylinearColumns {
    std::vector<std::vector<int>> kvecs;
    std::map<std::vector<int>, int> index;

    int count() const { return static_cast<int>(kvecs.size()); }
};

PolylinearColumns polylinear_columns(int n);

// sparse row of expand(t) over the polylinear columns of degree n
SparseRow expansion_row(const Term& t, int n, const Alphabet& alphabet,
                        const PolylinearColumns& cols);

/*
 * Square matrix whose rows are the expansions of the basis elements of the
 * polylinear multidegree on the first n alphabet letters; size
 * dim N_n = C(2n-2, n-1).
 */
SparseIntMatrix basis_matrix(int n, const Alphabet& alphabet);

struct IdentityReport {
    long checked = 0;
    std::vector<std::string> violations; // printed offending triples
    bool ok() const { return violations.empty(); }
};

// expands both defect polynomials for every triple; they must all vanish
IdentityReport verify_identities_under_realization(
    const std::vector<std::tuple<Term, Term, Term>>& triples);

struct SpanningReport {
    int n = 0;
    long monomial_count = 0; // n! * Catalan(n-1)
    long rank = 0;
    Int expected;
    bool ok() const { return Int(rank) == expected; }
};

/*
 * Rank of the matrix of expansions of every polylinear nonassociative
 * monomial of degree n; equals dim N_n. Throws CapExceeded for n beyond
 * the cap (the row count grows as n! * Catalan(n-1)).
 */
SpanningReport spanning_check(int n, int cap = 6);

struct CoordinateVector {
    std::shared_ptr<const std::vector<BasisElement>> basis;
    std::vector<Rat> coords;

    // sum coords_i * basis_i.term
    TermPolynomial reconstruction() const;
};

/*
 * Normal-form coordinates in the tableau basis of the input's multidegree.
 * Basis matrices and their factorizations are cached per multidegree.
 * Throws RankDeficient if the multidegree's basis expansions are dependent
 * (not expected for polylinear multidegrees) and InconsistentSystem if the
 * expansion leaves the row space.
 */
class Normalizer {
public:
    explicit Normalizer(Alphabet alphabet);

    CoordinateVector normalize(const Term& t);
    CoordinateVector normalize(const TermPolynomial& p);

    const Alphabet& alphabet() const { return alphabet_; }

private:
    struct Context {
        std::shared_ptr<const std::vector<BasisElement>> basis;
        std::map<DiffMonomial, int> column_of;
        std::unique_ptr<CoordinateSolver> solver;
    };

    const Context& context_for(const std::map<std::string, int>& multidegree);

    Alphabet alphabet_;
    std::map<std::string, Context> cache_;
};

} // namespace novikov

#endif // NOVIKOV_REALIZATION_HPP
