#include "novikov/realization.hpp"

#include <algorithm>
#include <stdexcept>

#include "novikov/combinatorics.hpp"
#include "novikov/errors.hpp"

namespace novikov {

PolylinearColumns polylinear_columns(int n) {
    if (n < 1)
        throw std::invalid_argument("degree must be >= 1");
    PolylinearColumns cols;
    // weak compositions of n-1 into n parts, lexicographically ascending
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    while (true) {
        int used = 0;
        for (std::size_t i = 0; i + 1 < k.size(); ++i)
            used += k[i];
        k.back() = (n - 1) - used;
        cols.index.emplace(k, static_cast<int>(cols.kvecs.size()));
        cols.kvecs.push_back(k);

        // odometer step on the first n-1 entries, bounded by the budget
        int i = n - 2;
        while (i >= 0) {
            int prefix = 0;
            for (int j = 0; j < i; ++j)
                prefix += k[static_cast<std::size_t>(j)];
            if (prefix + k[static_cast<std::size_t>(i)] < n - 1) {
                k[static_cast<std::size_t>(i)] += 1;
                for (std::size_t j = static_cast<std::size_t>(i) + 1; j + 1 < k.size(); ++j)
                    k[j] = 0;
                break;
            }
            k[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0)
            break;
        if (n == 1)
            break;
    }
    return cols;
}

SparseRow expansion_row(const Term& t, int n, const Alphabet& alphabet,
                        const PolylinearColumns& cols) {
    DiffPolynomial e = expand(t);
    SparseRow row;
    row.reserve(e.term_count());
    for (const auto& [m, c] : e.terms()) {
        std::vector<int> k(static_cast<std::size_t>(n), -1);
        for (const auto& [letter, order] : m.factors()) {
            std::size_t idx = alphabet.rank(letter);
            if (idx >= static_cast<std::size_t>(n) || k[idx] != -1)
                throw Error("expansion monomial is not polylinear of the expected degree: " +
                            m.str());
            k[idx] = order;
        }
        auto it = cols.index.find(k);
        if (it == cols.index.end())
            throw Error("expansion monomial outside the expected column set: " + m.str());
        row.emplace_back(it->second, c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

SparseIntMatrix basis_matrix(int n, const Alphabet& alphabet) {
    if (n < 1)
        throw std::invalid_argument("degree must be >= 1");
    if (alphabet.size() < static_cast<std::size_t>(n))
        throw std::invalid_argument("alphabet too small");
    PolylinearColumns cols = polylinear_columns(n);
    std::vector<std::string> letters(alphabet.letters().begin(), alphabet.letters().begin() + n);
    SparseIntMatrix m(cols.count());
    for (const auto& elem : basis_of_multidegree(letters, alphabet))
        m.add_row(expansion_row(elem.term, n, alphabet, cols));
    return m;
}

IdentityReport verify_identities_under_realization(
    const std::vector<std::tuple<Term, Term, Term>>& triples) {
    IdentityReport report;
    for (const auto& [a, b, c] : triples) {
        auto [first, second] = novikov_identity_defects(a, b, c);
        bool first_ok = expand_rational(first).empty();
        bool second_ok = expand_rational(second).empty();
        report.checked += 1;
        if (!first_ok || !second_ok) {
            report.violations.push_back("(" + a.str() + ", " + b.str() + ", " + c.str() + ")" +
                                        (first_ok ? "" : " [right-symmetry defect]") +
                                        (second_ok ? "" : " [left-commutativity defect]"));
        }
    }
    return report;
}

namespace {

long catalan_long(int m) {
    Int c = binomial(2 * m, m) / Int(m + 1);
    return c.get_si();
}

} // namespace

SpanningReport spanning_check(int n, int cap) {
    if (n < 2)
        throw std::invalid_argument("spanning check needs degree >= 2");
    if (n > cap)
        throw CapExceeded("spanning check capped at degree " + std::to_string(cap));

    SpanningReport report;
    report.n = n;
    report.expected = dim_polylinear(n);

    Alphabet alphabet = Alphabet::prefix(static_cast<std::size_t>(n));
    PolylinearColumns cols = polylinear_columns(n);
    RankAccumulator acc(cols.count());

    report.monomial_count =
        factorial(n).get_si() * catalan_long(n - 1);

    std::vector<std::string> letters(alphabet.letters().begin(), alphabet.letters().begin() + n);
    std::sort(letters.begin(), letters.end());
    bool done = false;
    do {
        // Catalan(n-1) tree shapes for this letter order
        std::vector<Term> trees;
        struct Builder {
            static void run(const std::vector<std::string>& w, std::size_t lo, std::size_t hi,
                            std::vector<Term>& out) {
                if (hi - lo == 1) {
                    out.push_back(Term::leaf(w[lo]));
                    return;
                }
                for (std::size_t split = lo + 1; split < hi; ++split) {
                    std::vector<Term> lefts, rights;
                    run(w, lo, split, lefts);
                    run(w, split, hi, rights);
                    for (const Term& l : lefts)
                        for (const Term& r : rights)
                            out.push_back(Term::product(l, r));
                }
            }
        };
        Builder::run(letters, 0, letters.size(), trees);
        for (const Term& t : trees) {
            acc.absorb(expansion_row(t, n, alphabet, cols));
            // the rank is monotone and bounded by the column count, so the
            // remaining rows cannot change the verdict once it is reached
            if (Int(acc.rank()) == report.expected) {
                done = true;
                break;
            }
        }
    } while (!done && std::next_permutation(letters.begin(), letters.end()));

    report.rank = acc.rank();
    return report;
}

TermPolynomial CoordinateVector::reconstruction() const {
    TermPolynomial p;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            p.add((*basis)[i].term, coords[i]);
    return p;
}

Normalizer::Normalizer(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

const Normalizer::Context& Normalizer::context_for(const std::map<std::string, int>& multidegree) {
    std::string key;
    for (const auto& [letter, count] : multidegree)
        for (int i = 0; i < count; ++i)
            key += letter + "\x1f";
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;

    std::vector<std::string> letters;
    for (const auto& [letter, count] : multidegree)
        letters.insert(letters.end(), static_cast<std::size_t>(count), letter);

    Context ctx;
    ctx.basis = std::make_shared<const std::vector<BasisElement>>(
        basis_of_multidegree(letters, alphabet_));

    std::vector<DiffPolynomial> expansions;
    expansions.reserve(ctx.basis->size());
    for (const auto& elem : *ctx.basis)
        expansions.push_back(expand(elem.term));
    for (const auto& e : expansions)
        for (const auto& [m, c] : e.terms())
            ctx.column_of.emplace(m, 0);
    int next = 0;
    for (auto& [m, idx] : ctx.column_of)
        idx = next++;

    std::vector<SparseRow> rows;
    rows.reserve(expansions.size());
    for (const auto& e : expansions) {
        SparseRow row;
        row.reserve(e.term_count());
        for (const auto& [m, c] : e.terms())
            row.emplace_back(ctx.column_of.at(m), c);
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
    }
    ctx.solver = std::make_unique<CoordinateSolver>(rows, next);

    return cache_.emplace(std::move(key), std::move(ctx)).first->second;
}

CoordinateVector Normalizer::normalize(const Term& t) { return normalize(TermPolynomial(t)); }

CoordinateVector Normalizer::normalize(const TermPolynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("the zero polynomial has no multidegree");
    for (const auto& [letter, count] : p.letter_multiset())
        alphabet_.rank(letter); // UnknownLetter for foreign generators

    const Context& ctx = context_for(p.letter_multiset());

    std::vector<std::pair<int, Rat>> rhs;
    for (const auto& [m, c] : expand_rational(p)) {
        auto it = ctx.column_of.find(m);
        if (it == ctx.column_of.end())
            throw InconsistentSystem("expansion monomial " + m.str() +
                                     " does not occur in any basis expansion");
        rhs.emplace_back(it->second, c);
    }

    CoordinateVector cv;
    cv.basis = ctx.basis;
    cv.coords = ctx.solver->coordinates(rhs);
    return cv;
}

} // namespace novikov
