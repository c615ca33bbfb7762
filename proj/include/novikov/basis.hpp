#ifndef NOVIKOV_BASIS_HPP
#define NOVIKOV_BASIS_HPP

#include <vector>

#include "novikov/alphabet.hpp"
#include "novikov/numbers.hpp"
#include "novikov/term.hpp"
#include "novikov/young.hpp"

namespace novikov {

struct BasisElement {
    NovikovTableau tableau;
    Term term;
};

/*
 * The bracketing image of a tableau: with X_i the left-normed product of
 * the entries of row i (row 1 also takes the nose as its last factor),
 * the image is X_k o (X_{k-1} o ( ... o (X_2 o X_1) ... )).
 * Throws InvalidTableau if a filling rule fails.
 */
Term tableau_to_term(const NovikovTableau& t, const Alphabet& alphabet);

// One element per tableau of the multidegree, in enumeration order.
std::vector<BasisElement> basis_of_multidegree(const std::vector<std::string>& letters,
                                               const Alphabet& alphabet);

// dim N_n = C(2n-2, n-1)
Int dim_polylinear(long n);

} // namespace novikov

#endif // NOVIKOV_BASIS_HPP
