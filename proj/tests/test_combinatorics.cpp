#include <doctest.h>

#include <map>
#include <vector>

#include "novikov/combinatorics.hpp"
#include "novikov/errors.hpp"

using namespace novikov;

namespace {

// Pascal-triangle oracle, independent of the GMP-backed implementation
Int pascal(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::vector<std::vector<Int>> t(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

long count_partitions_oracle(int remaining, int max_part) {
    if (remaining == 0)
        return 1;
    long total = 0;
    for (int p = std::min(remaining, max_part); p >= 1; --p)
        total += count_partitions_oracle(remaining - p, p);
    return total;
}

} // namespace

TEST_CASE("binomial basics") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 0) == 1);
    for (int n = 0; n <= 24; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == pascal(n, k));
}

TEST_CASE("multinomial") {
    CHECK(multinomial(2, {1, 1}) == 2);
    CHECK(multinomial(3, {3}) == 1);
    CHECK(multinomial(4, {2, 1, 1}) == 12);
    CHECK(multinomial(0, {}) == 1);
    CHECK_THROWS_AS(multinomial(3, {1, 1}), MultinomialMismatch);
    CHECK_THROWS_AS(multinomial(2, {3, -1}), MultinomialMismatch);
}

TEST_CASE("partition enumeration") {
    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts() == std::vector<long>{3});
    CHECK(p3[1].parts() == std::vector<long>{2, 1});
    CHECK(p3[2].parts() == std::vector<long>{1, 1, 1});

    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].part_count() == 0);
    CHECK(p0[0].weight() == 0);

    CHECK(partitions_of(10).size() == 42);
    for (int d = 0; d <= 12; ++d)
        CHECK(static_cast<long>(partitions_of(d).size()) ==
              count_partitions_oracle(d, std::max(1, d)));
}

TEST_CASE("partition accessors") {
    PartitionWithMultiplicities lambda({2, 1, 1});
    CHECK(lambda.weight() == 4);
    CHECK(lambda.part_count() == 3);
    CHECK(lambda.multiplicities().at(1) == 2);
    CHECK(lambda.multiplicities().at(2) == 1);
}

TEST_CASE("partition-binomial convolution equals the central binomial") {
    CHECK(partition_binomial_convolution(1) == 1);
    CHECK(partition_binomial_convolution(2) == 2);
    CHECK(partition_binomial_convolution(4) == 20);
    CHECK(partition_binomial_convolution(12) == 705432);
    for (long n = 1; n <= 30; ++n)
        CHECK(partition_binomial_convolution(n) == binomial(2 * n - 2, n - 1));
}

TEST_CASE("fixed-part-count multinomial sums") {
    auto [l1, r1] = partition_multinomial_sum(4, 2);
    CHECK(l1 == 2);
    CHECK(r1 == 2);
    auto [l2, r2] = partition_multinomial_sum(4, 3);
    CHECK(l2 == 1);
    CHECK(r2 == 1);
    auto [l3, r3] = partition_multinomial_sum(2, 1);
    CHECK(l3 == 1);
    CHECK(r3 == 1);
    for (long n = 2; n <= 20; ++n)
        for (long s = 1; s <= n - 1; ++s) {
            auto [lhs, rhs] = partition_multinomial_sum(n, s);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("Vandermonde convolution") {
    auto [l1, r1] = vandermonde_convolution(1, 1, 1);
    CHECK(l1 == 2);
    CHECK(r1 == 2);
    auto [l2, r2] = vandermonde_convolution(4, 4, 4);
    CHECK(l2 == 70);
    CHECK(r2 == 70);
    // the instance used to finish the convolution argument at n=4
    auto [l3, r3] = vandermonde_convolution(4, 2, 3);
    CHECK(l3 == 20);
    CHECK(r3 == 20);
    for (long n = 0; n <= 12; ++n)
        for (long p = 0; p <= 12; ++p)
            for (long m = 0; m <= 12; ++m) {
                auto [lhs, rhs] = vandermonde_convolution(n, p, m);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("central binomial sandwich bounds") {
    auto b2 = central_binomial_bounds(2);
    CHECK(b2.lower == 2);
    CHECK(b2.value == 2);
    CHECK(b2.upper == 4);

    auto b4 = central_binomial_bounds(4);
    CHECK(b4.lower == make_rat(32, 3));
    CHECK(b4.value == 20);
    CHECK(b4.upper == 64);

    for (long n = 2; n <= 500; ++n) {
        auto b = central_binomial_bounds(n);
        CHECK(b.lower <= Rat(b.value));
        CHECK(b.value <= b.upper);
    }
}

TEST_CASE("scaled integer roots") {
    const Int scale = pow10(6);
    // oracle: GMP's exact integer root of value * scale^n
    auto oracle = [&](const Int& value, long n) {
        Int x = value * int_pow(scale, static_cast<unsigned long>(n));
        Int r;
        mpz_root(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    };
    CHECK(nth_root_floor_scaled(Rat(20), 4, scale) == oracle(20, 4));
    CHECK(nth_root_floor_scaled(Rat(2), 2, scale) == oracle(2, 2));
    CHECK(nth_root_floor_scaled(Rat(binomial(18, 9)), 10, scale) == oracle(binomial(18, 9), 10));
    CHECK(nth_root_floor_scaled(Rat(1), 7, scale) == scale);
    // rational argument: floor(scale * (32/3)^(1/4))
    Int r = nth_root_floor_scaled(make_rat(32, 3), 4, scale);
    CHECK(int_pow(r, 4) * 3 <= 32 * int_pow(scale, 4));
    CHECK(int_pow(r + 1, 4) * 3 > 32 * int_pow(scale, 4));
}

TEST_CASE("exponent estimate") {
    CHECK(exponent_estimate(1) == 1);
    // 20^(1/4) = 2.1147425..., floored at six decimals
    CHECK(exponent_estimate(4) == make_rat(2114742, 1000000));
    Rat est = exponent_estimate(200);
    CHECK(make_rat(38, 10) < est);
    CHECK(est < Rat(4));
}

TEST_CASE("power series arithmetic") {
    PowerSeries geom = PowerSeries::binomial_series(Rat(-1), Rat(-1), 8);
    for (int i = 0; i <= 8; ++i)
        CHECK(geom.coeff(i) == 1); // 1/(1-x)

    // square of (1-4x)^(-1/2) is the geometric series in 4x
    PowerSeries g = PowerSeries::binomial_series(make_rat(-1, 2), Rat(-4), 10);
    PowerSeries g2 = g * g;
    Rat pow4(1);
    for (int i = 0; i <= 10; ++i) {
        CHECK(g2.coeff(i) == pow4);
        pow4 *= 4;
    }

    PowerSeries sum = g2 - g2;
    for (int i = 0; i <= 10; ++i)
        CHECK(sum.coeff(i) == 0);

    // composition with the polynomial 2x
    PowerSeries inner(8);
    inner.set_coeff(1, Rat(2));
    PowerSeries composed = geom.compose(inner);
    Rat pow2v(1);
    for (int i = 0; i <= 8; ++i) {
        CHECK(composed.coeff(i) == pow2v);
        pow2v *= 2;
    }

    // rational power: ((1+x)^(1/2))^2 == 1+x
    PowerSeries base(8);
    base.set_coeff(0, Rat(1));
    base.set_coeff(1, Rat(1));
    PowerSeries root = base.pow_rational(make_rat(1, 2));
    PowerSeries squared = root * root;
    CHECK(squared == base);

    CHECK(generalized_binomial(make_rat(-1, 2), 0) == 1);
    CHECK(generalized_binomial(make_rat(-1, 2), 1) == make_rat(-1, 2));
    CHECK(generalized_binomial(make_rat(-1, 2), 2) == make_rat(3, 8));
}

TEST_CASE("codimension series") {
    PowerSeries s = codimension_series(30);
    CHECK(s.coeff(0) == 0);
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(4) == 20);
    CHECK(s.coeff(10) == 48620);
    for (int n = 1; n <= 30; ++n)
        CHECK(s.coeff(n) == Rat(binomial(2 * n - 2, n - 1)));
}
