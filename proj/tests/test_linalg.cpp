#include <doctest.h>

#include <vector>

#include "novikov/checks.hpp"
#include "novikov/errors.hpp"
#include "novikov/linalg.hpp"

using namespace novikov;

namespace {

SparseIntMatrix from_dense(const std::vector<std::vector<long>>& d) {
    int cols = d.empty() ? 0 : static_cast<int>(d[0].size());
    SparseIntMatrix m(cols);
    for (const auto& row : d) {
        SparseRow s;
        for (int j = 0; j < cols; ++j)
            if (row[static_cast<std::size_t>(j)] != 0)
                s.emplace_back(j, Int(row[static_cast<std::size_t>(j)]));
        m.add_row(std::move(s));
    }
    return m;
}

std::vector<std::vector<Int>> to_bigint(const std::vector<std::vector<long>>& d) {
    std::vector<std::vector<Int>> m;
    for (const auto& row : d) {
        std::vector<Int> r;
        for (long v : row)
            r.emplace_back(v);
        m.push_back(std::move(r));
    }
    return m;
}

// third route: rational Gaussian elimination
long rank_rational(std::vector<std::vector<long>> d) {
    if (d.empty())
        return 0;
    std::size_t rows = d.size(), cols = d[0].size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = Rat(d[i][j]);
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0)
                continue;
            Rat f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// cofactor-expansion determinant for small matrices
Int det_cofactor(const std::vector<std::vector<long>>& d) {
    std::size_t n = d.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return d[0][0];
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<long>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(d[i][k]);
            minor.push_back(std::move(row));
        }
        Int term = Int(d[0][j]) * det_cofactor(minor);
        det += (j % 2 == 0) ? term : Int(-term);
    }
    return det;
}

} // namespace

TEST_CASE("rank of simple matrices") {
    std::vector<std::vector<long>> eye5(5, std::vector<long>(5, 0));
    for (int i = 0; i < 5; ++i)
        eye5[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    CHECK(rank_exact(from_dense(eye5)) == 5);
    CHECK(rank_bareiss_dense(to_bigint(eye5)) == 5);

    std::vector<std::vector<long>> zero34(3, std::vector<long>(4, 0));
    CHECK(rank_exact(from_dense(zero34)) == 0);
    CHECK(rank_bareiss_dense(to_bigint(zero34)) == 0);

    std::vector<std::vector<long>> dependent = {{1, 2, 3}, {2, 4, 6}, {1, 1, 1}};
    CHECK(rank_exact(from_dense(dependent)) == 2);
    CHECK(rank_bareiss_dense(to_bigint(dependent)) == 2);
}

TEST_CASE("three rank routes agree on random matrices") {
    Rng rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        int rows = 1 + static_cast<int>(rng.below(7));
        int cols = 1 + static_cast<int>(rng.below(7));
        int inner = 1 + static_cast<int>(rng.below(4));
        // random product A(rows x inner) * B(inner x cols) keeps ranks small
        std::vector<std::vector<long>> a(static_cast<std::size_t>(rows),
                                         std::vector<long>(static_cast<std::size_t>(inner)));
        std::vector<std::vector<long>> b(static_cast<std::size_t>(inner),
                                         std::vector<long>(static_cast<std::size_t>(cols)));
        for (auto& row : a)
            for (auto& v : row)
                v = static_cast<long>(rng.below(11)) - 5;
        for (auto& row : b)
            for (auto& v : row)
                v = static_cast<long>(rng.below(11)) - 5;
        std::vector<std::vector<long>> m(static_cast<std::size_t>(rows),
                                         std::vector<long>(static_cast<std::size_t>(cols), 0));
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < inner; ++k)
                for (int j = 0; j < cols; ++j)
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                        b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];

        long sparse = rank_exact(from_dense(m));
        long dense = rank_bareiss_dense(to_bigint(m));
        long rational = rank_rational(m);
        CHECK(sparse == dense);
        CHECK(sparse == rational);
        CHECK(sparse <= inner);
    }
}

TEST_CASE("determinants") {
    CHECK(determinant_bareiss(to_bigint({{2, 1}, {1, 2}})) == 3);
    CHECK(determinant_bareiss(to_bigint({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant_bareiss(to_bigint({{0, 1}, {1, 0}})) == -1);

    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.below(4));
        std::vector<std::vector<long>> m(static_cast<std::size_t>(n),
                                         std::vector<long>(static_cast<std::size_t>(n)));
        for (auto& row : m)
            for (auto& v : row)
                v = static_cast<long>(rng.below(9)) - 4;
        CHECK(determinant_bareiss(to_bigint(m)) == det_cofactor(m));
    }
}

TEST_CASE("rank accumulator early exit matches full rank") {
    std::vector<std::vector<long>> m = {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}, {2, 2, 2}};
    RankAccumulator acc(3);
    SparseIntMatrix sm = from_dense(m);
    long absorbed = 0;
    for (const auto& row : sm.rows()) {
        if (acc.absorb(SparseRow(row)))
            ++absorbed;
        if (acc.rank() == 3)
            break;
    }
    CHECK(acc.rank() == 3);
    CHECK(absorbed == 3);
    CHECK(rank_exact(sm) == 3);
}

TEST_CASE("coordinate solver recovers combinations") {
    // rows: (1,0,1), (0,2,0), (0,0,3)
    std::vector<SparseRow> rows = {
        {{0, Int(1)}, {2, Int(1)}},
        {{1, Int(2)}},
        {{2, Int(3)}},
    };
    CoordinateSolver solver(rows, 3);

    // rhs = 2*r0 - r1 + (1/3)*r2 = (2, -2, 3)
    std::vector<std::pair<int, Rat>> rhs = {{0, Rat(2)}, {1, Rat(-2)}, {2, Rat(3)}};
    auto coords = solver.coordinates(rhs);
    REQUIRE(coords.size() == 3);
    CHECK(coords[0] == 2);
    CHECK(coords[1] == -1);
    CHECK(coords[2] == make_rat(1, 3));

    // outside the row space only when a fresh column appears; this span is
    // all of Q^3, so exercise inconsistency with a genuinely deficient basis
    std::vector<SparseRow> deficient = {
        {{0, Int(1)}, {1, Int(1)}},
    };
    CoordinateSolver partial(deficient, 3);
    CHECK_THROWS_AS(partial.coordinates({{0, Rat(1)}}), InconsistentSystem);

    std::vector<SparseRow> dependent = {
        {{0, Int(1)}, {1, Int(1)}},
        {{0, Int(2)}, {1, Int(2)}},
    };
    CHECK_THROWS_AS(CoordinateSolver(dependent, 3), RankDeficient);
}
