#include "novikov/basis.hpp"

#include <stdexcept>

#include "novikov/combinatorics.hpp"
#include "novikov/errors.hpp"

namespace novikov {

namespace {

Term left_normed(const std::vector<std::string>& word) {
    Term acc = Term::leaf(word.front());
    for (std::size_t i = 1; i < word.size(); ++i)
        acc = Term::product(acc, Term::leaf(word[i]));
    return acc;
}

} // namespace

Term tableau_to_term(const NovikovTableau& t, const Alphabet& alphabet) {
    auto check = validate_tableau(t, alphabet);
    if (!check.ok)
        throw InvalidTableau(check.violation);

    if (t.shape().row_count() == 0)
        return Term::leaf(t.nose());

    std::vector<std::string> first_row = t.rows().front();
    first_row.push_back(t.nose());
    Term acc = left_normed(first_row);
    for (int i = 1; i < t.shape().row_count(); ++i)
        acc = Term::product(left_normed(t.rows()[static_cast<std::size_t>(i)]), acc);
    return acc;
}

std::vector<BasisElement> basis_of_multidegree(const std::vector<std::string>& letters,
                                               const Alphabet& alphabet) {
    if (letters.empty())
        throw std::invalid_argument("multidegree must contain at least one letter");
    std::vector<BasisElement> out;
    for (auto& tableau : enumerate_tableaux(static_cast<int>(letters.size()), letters, alphabet)) {
        Term term = tableau_to_term(tableau, alphabet);
        out.push_back({std::move(tableau), std::move(term)});
    }
    return out;
}

Int dim_polylinear(long n) {
    if (n < 1)
        throw std::invalid_argument("degree must be >= 1");
    return binomial(2 * n - 2, n - 1);
}

} // namespace novikov
