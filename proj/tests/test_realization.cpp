#include <doctest.h>

#include <set>

#include "novikov/basis.hpp"
#include "novikov/checks.hpp"
#include "novikov/errors.hpp"
#include "novikov/realization.hpp"

using namespace novikov;

TEST_CASE("polylinear column indexing") {
    auto cols1 = polylinear_columns(1);
    CHECK(cols1.count() == 1);
    CHECK(cols1.kvecs[0] == std::vector<int>{0});

    auto cols2 = polylinear_columns(2);
    REQUIRE(cols2.count() == 2);
    CHECK(cols2.kvecs[0] == std::vector<int>{0, 1});
    CHECK(cols2.kvecs[1] == std::vector<int>{1, 0});

    auto cols3 = polylinear_columns(3);
    REQUIRE(cols3.count() == 6);
    CHECK(cols3.kvecs.front() == std::vector<int>{0, 0, 2});
    CHECK(cols3.kvecs.back() == std::vector<int>{2, 0, 0});

    for (int n = 1; n <= 7; ++n)
        CHECK(Int(polylinear_columns(n).count()) == dim_polylinear(n));
}

TEST_CASE("basis matrix for tiny degrees") {
    Alphabet a1 = Alphabet::prefix(1);
    SparseIntMatrix m1 = basis_matrix(1, a1);
    REQUIRE(m1.row_count() == 1);
    REQUIRE(m1.cols() == 1);
    CHECK(m1.row(0) == SparseRow{{0, Int(1)}});

    // degree 2: the two basis rows hit distinct unit columns
    Alphabet a2 = Alphabet::prefix(2);
    SparseIntMatrix m2 = basis_matrix(2, a2);
    REQUIRE(m2.row_count() == 2);
    std::set<int> lead_cols;
    for (int i = 0; i < 2; ++i) {
        REQUIRE(m2.row(i).size() == 1);
        CHECK(m2.row(i).front().second == 1);
        lead_cols.insert(m2.row(i).front().first);
    }
    CHECK(lead_cols == std::set<int>{0, 1});
}

TEST_CASE("basis matrix ranks match the dimension formula") {
    for (int n = 1; n <= 5; ++n) {
        Alphabet alphabet = Alphabet::prefix(static_cast<std::size_t>(n));
        CHECK(Int(rank_exact(basis_matrix(n, alphabet))) == dim_polylinear(n));
    }
}

TEST_CASE("basis matrix determinant regression") {
    // the change of basis between tableau expansions and monomials is
    // unimodular for small degrees; these values are pinned once computed
    auto det_of = [](int n) {
        Alphabet alphabet = Alphabet::prefix(static_cast<std::size_t>(n));
        SparseIntMatrix m = basis_matrix(n, alphabet);
        std::vector<std::vector<Int>> dense(
            static_cast<std::size_t>(m.row_count()),
            std::vector<Int>(static_cast<std::size_t>(m.cols()), 0));
        for (int i = 0; i < m.row_count(); ++i)
            for (const auto& [c, v] : m.row(i))
                dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = v;
        return determinant_bareiss(dense);
    };
    CHECK(det_of(2) == -1);
    CHECK(det_of(3) == -1);
    CHECK(det_of(4) == -1);
    CHECK(det_of(5) == 1);
}

TEST_CASE("spanning of all polylinear monomials") {
    CHECK(spanning_check(2).rank == 2);

    SpanningReport r3 = spanning_check(3);
    CHECK(r3.monomial_count == 12);
    CHECK(r3.rank == 6);
    CHECK(r3.ok());

    SpanningReport r4 = spanning_check(4);
    CHECK(r4.monomial_count == 120);
    CHECK(r4.rank == 20);
    CHECK(r4.ok());

    CHECK_THROWS_AS(spanning_check(7), CapExceeded);
}

TEST_CASE("identity report flags nothing on valid input") {
    auto report = verify_identities_under_realization(
        {{Term::leaf("a"), Term::leaf("b"), Term::leaf("c")}});
    CHECK(report.checked == 1);
    CHECK(report.ok());
}

TEST_CASE("normalize returns unit coordinates on basis elements") {
    Alphabet alphabet = Alphabet::prefix(4);
    Normalizer normalizer(alphabet);
    auto basis = basis_of_multidegree(alphabet.letters(), alphabet);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        CoordinateVector cv = normalizer.normalize(basis[i].term);
        REQUIRE(cv.coords.size() == basis.size());
        for (std::size_t j = 0; j < cv.coords.size(); ++j)
            CHECK(cv.coords[j] == (i == j ? Rat(1) : Rat(0)));
    }
}

TEST_CASE("normalize identifies terms equal modulo the identities") {
    Alphabet alphabet = Alphabet::prefix(3);
    Normalizer normalizer(alphabet);

    Term a = Term::leaf("a");
    Term b = Term::leaf("b");
    Term c = Term::leaf("c");

    TermPolynomial lhs(Term::product(Term::product(a, b), c));
    lhs = lhs + associator(a, b, c);
    CoordinateVector left = normalizer.normalize(lhs);
    CoordinateVector right = normalizer.normalize(Term::product(a, Term::product(b, c)));
    CHECK(left.coords == right.coords);
}

TEST_CASE("normalize reconstructs the expansion exactly") {
    Alphabet alphabet = Alphabet::prefix(5);
    Normalizer normalizer(alphabet);

    Term t = parse_term("(c*(b*(a*d)))", alphabet);
    CoordinateVector cv = normalizer.normalize(t);
    CHECK(expand_rational(cv.reconstruction()) == expand_rational(TermPolynomial(t)));

    Rng rng(21);
    for (int i = 0; i < 40; ++i) {
        int degree = 2 + static_cast<int>(rng.below(4));
        Term s = random_polylinear_term(rng, degree, alphabet);
        CoordinateVector v = normalizer.normalize(s);
        CHECK(expand_rational(v.reconstruction()) == expand_rational(TermPolynomial(s)));
    }
}

TEST_CASE("normalize is a projection") {
    Alphabet alphabet = Alphabet::prefix(4);
    Normalizer normalizer(alphabet);
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        int degree = 2 + static_cast<int>(rng.below(3));
        Term t = random_polylinear_term(rng, degree, alphabet);
        CoordinateVector cv = normalizer.normalize(t);
        CoordinateVector again = normalizer.normalize(cv.reconstruction());
        CHECK(cv.coords == again.coords);
    }
}

TEST_CASE("normalize rejects the zero polynomial") {
    Alphabet alphabet = Alphabet::prefix(2);
    Normalizer normalizer(alphabet);
    CHECK_THROWS_AS(normalizer.normalize(TermPolynomial()), std::invalid_argument);
}

TEST_CASE("non-polylinear multidegrees work when the rank allows") {
    // degree 3 on letters {a,a,b}: the realization stays independent here
    Alphabet alphabet = Alphabet::prefix(2);
    Normalizer normalizer(alphabet);
    Term t = parse_term("(a*(a*b))", alphabet);
    CoordinateVector cv = normalizer.normalize(t);
    CHECK(expand_rational(cv.reconstruction()) == expand_rational(TermPolynomial(t)));
}
