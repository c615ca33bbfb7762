#ifndef NOVIKOV_COMBINATORICS_HPP
#define NOVIKOV_COMBINATORICS_HPP

#include <map>
#include <utility>
#include <vector>

#include "novikov/numbers.hpp"

namespace novikov {

// C(n,k); zero outside 0 <= k <= n.
Int binomial(long n, long k);

Int factorial(long n);

// m! / (m_1! m_2! ... ); throws MultinomialMismatch unless sum(parts) == m.
Int multinomial(long m, const std::vector<long>& parts);

/*
 * A partition stored as part size -> multiplicity. weight() is the number
 * being partitioned, part_count() the total number of parts.
 */
class PartitionWithMultiplicities {
public:
    PartitionWithMultiplicities() = default;
    explicit PartitionWithMultiplicities(const std::vector<long>& parts);

    long weight() const;
    long part_count() const;
    const std::map<long, long>& multiplicities() const { return mult_; }

    // multiplicities as a plain vector (one entry per distinct part size)
    std::vector<long> multiplicity_vector() const;

    // parts in weakly decreasing order
    std::vector<long> parts() const;

    bool operator==(const PartitionWithMultiplicities& o) const { return mult_ == o.mult_; }

private:
    std::map<long, long> mult_;
};

// All partitions of d, in lexicographically decreasing order of part lists.
std::vector<PartitionWithMultiplicities> partitions_of(long d);

/*
 * sum over partitions lambda of n-1 of
 *     multinomial(m(lambda); m_1(lambda), ...) * C(n, m(lambda)).
 * Equals C(2n-2, n-1); the equality is what the tests assert.
 */
Int partition_binomial_convolution(long n);

/*
 * For partitions of n-1 with exactly s parts, returns
 *   (sum of multinomial(s; m_1, ...),  C(n-2, s-1)).
 * The two agree; callers assert the equality.
 */
std::pair<Int, Int> partition_multinomial_sum(long n, long s);

// Vandermonde convolution: (C(n+p, m), sum_s C(n, m-s) * C(p, s)).
std::pair<Int, Int> vandermonde_convolution(long n, long p, long m);

// Sandwich bounds for the central binomial coefficient C(2n-2, n-1), n >= 2:
//   2^(2n-3)/(n-1) <= C(2n-2, n-1) <= 2^(2n-2).
struct CentralBinomialBounds {
    Rat lower;
    Int value;
    Int upper;
};
CentralBinomialBounds central_binomial_bounds(long n);

/*
 * floor(scale * x^(1/n)) computed by integer bisection; no floating point.
 * x must be nonnegative.
 */
Int nth_root_floor_scaled(const Rat& x, long n, const Int& scale);

// C(2n-2, n-1)^(1/n) rounded down to 6 decimal digits, as an exact rational.
Rat exponent_estimate(long n);

/*
 * Truncated formal power series with exact rational coefficients,
 * c_0..c_N. All arithmetic is exact up to the truncation order.
 */
class PowerSeries {
public:
    explicit PowerSeries(int order);
    PowerSeries(int order, std::vector<Rat> coeffs);

    // (1 + scale*x)^alpha via the generalized binomial series.
    static PowerSeries binomial_series(const Rat& alpha, const Rat& scale, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int i) const { return c_.at(i); }
    void set_coeff(int i, const Rat& v) { c_.at(i) = v; }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;

    // multiplication by x^j (drops coefficients past the truncation order)
    PowerSeries shifted(int j) const;

    // f(g) for g with zero constant term
    PowerSeries compose(const PowerSeries& inner) const;

    // f^alpha for f with constant term 1, via the binomial series
    PowerSeries pow_rational(const Rat& alpha) const;

    bool operator==(const PowerSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Rat> c_;
};

// alpha*(alpha-1)*...*(alpha-k+1)/k! for rational alpha
Rat generalized_binomial(const Rat& alpha, long k);

// x * (1 - 4x)^(-1/2) truncated at order N; coefficient of x^n is dim N_n.
PowerSeries codimension_series(int order);

} // namespace novikov

#endif // NOVIKOV_COMBINATORICS_HPP
