#include "novikov/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

#include "novikov/errors.hpp"

namespace novikov {

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(long n) {
    if (n < 0)
        throw std::invalid_argument("factorial of negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int multinomial(long m, const std::vector<long>& parts) {
    long sum = 0;
    for (long p : parts) {
        if (p < 0)
            throw MultinomialMismatch("negative multiplicity in multinomial coefficient");
        sum += p;
    }
    if (sum != m)
        throw MultinomialMismatch("multinomial parts sum to " + std::to_string(sum) +
                                  ", expected " + std::to_string(m));
    Int r = factorial(m);
    for (long p : parts)
        r /= factorial(p);
    return r;
}

PartitionWithMultiplicities::PartitionWithMultiplicities(const std::vector<long>& parts) {
    for (long p : parts) {
        if (p < 1)
            throw std::invalid_argument("partition parts must be positive");
        mult_[p] += 1;
    }
}

long PartitionWithMultiplicities::weight() const {
    long w = 0;
    for (const auto& [size, count] : mult_)
        w += size * count;
    return w;
}

long PartitionWithMultiplicities::part_count() const {
    long m = 0;
    for (const auto& [size, count] : mult_)
        m += count;
    return m;
}

std::vector<long> PartitionWithMultiplicities::multiplicity_vector() const {
    std::vector<long> v;
    v.reserve(mult_.size());
    for (const auto& [size, count] : mult_)
        v.push_back(count);
    return v;
}

std::vector<long> PartitionWithMultiplicities::parts() const {
    std::vector<long> v;
    for (auto it = mult_.rbegin(); it != mult_.rend(); ++it)
        v.insert(v.end(), it->second, it->first);
    return v;
}

namespace {

void partitions_rec(long remaining, long max_part, std::vector<long>& acc,
                    std::vector<PartitionWithMultiplicities>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<PartitionWithMultiplicities> partitions_of(long d) {
    if (d < 0)
        throw std::invalid_argument("cannot partition a negative number");
    std::vector<PartitionWithMultiplicities> out;
    std::vector<long> acc;
    partitions_rec(d, d == 0 ? 1 : d, acc, out);
    return out;
}

Int partition_binomial_convolution(long n) {
    if (n < 1)
        throw std::invalid_argument("argument must be >= 1");
    Int total = 0;
    for (const auto& lambda : partitions_of(n - 1)) {
        long m = lambda.part_count();
        total += multinomial(m, lambda.multiplicity_vector()) * binomial(n, m);
    }
    return total;
}

std::pair<Int, Int> partition_multinomial_sum(long n, long s) {
    if (n < 2 || s < 1 || s > n - 1)
        throw std::invalid_argument("need 1 <= s <= n-1");
    Int lhs = 0;
    for (const auto& lambda : partitions_of(n - 1)) {
        if (lambda.part_count() != s)
            continue;
        lhs += multinomial(s, lambda.multiplicity_vector());
    }
    return {lhs, binomial(n - 2, s - 1)};
}

std::pair<Int, Int> vandermonde_convolution(long n, long p, long m) {
    if (n < 0 || p < 0 || m < 0)
        throw std::invalid_argument("arguments must be nonnegative");
    Int rhs = 0;
    for (long s = 0; s <= m; ++s)
        rhs += binomial(n, m - s) * binomial(p, s);
    return {binomial(n + p, m), rhs};
}

CentralBinomialBounds central_binomial_bounds(long n) {
    if (n < 2)
        throw std::invalid_argument("bounds are stated for n >= 2");
    CentralBinomialBounds b;
    b.lower = make_rat(pow2(static_cast<unsigned long>(2 * n - 3)), Int(n - 1));
    b.value = binomial(2 * n - 2, n - 1);
    b.upper = pow2(static_cast<unsigned long>(2 * n - 2));
    return b;
}

Int nth_root_floor_scaled(const Rat& x, long n, const Int& scale) {
    if (n < 1)
        throw std::invalid_argument("root order must be >= 1");
    if (sgn(x) < 0)
        throw std::invalid_argument("argument must be nonnegative");
    const Int num = x.get_num();
    const Int den = x.get_den();
    // largest r with r^n * den <= num * scale^n
    const Int target = num * int_pow(scale, static_cast<unsigned long>(n));
    Int lo = 0;
    Int hi = 1;
    while (int_pow(hi, static_cast<unsigned long>(n)) * den <= target)
        hi *= 2;
    // invariant: lo^n*den <= target < hi^n*den
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (int_pow(mid, static_cast<unsigned long>(n)) * den <= target)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

Rat exponent_estimate(long n) {
    if (n < 1)
        throw std::invalid_argument("argument must be >= 1");
    const Int scale = pow10(6);
    Int r = nth_root_floor_scaled(Rat(binomial(2 * n - 2, n - 1)), n, scale);
    return make_rat(r, scale);
}

PowerSeries::PowerSeries(int order) {
    if (order < 0)
        throw std::invalid_argument("truncation order must be >= 0");
    c_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

PowerSeries::PowerSeries(int order, std::vector<Rat> coeffs) : PowerSeries(order) {
    if (coeffs.size() > c_.size())
        throw std::invalid_argument("more coefficients than truncation order allows");
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

Rat generalized_binomial(const Rat& alpha, long k) {
    if (k < 0)
        return Rat(0);
    Rat r(1);
    for (long i = 0; i < k; ++i) {
        r *= alpha - Rat(i);
        r /= Rat(i + 1);
    }
    return r;
}

PowerSeries PowerSeries::binomial_series(const Rat& alpha, const Rat& scale, int order) {
    PowerSeries s(order);
    Rat term(1); // generalized_binomial(alpha, k) * scale^k, built incrementally
    s.c_[0] = term;
    for (int k = 1; k <= order; ++k) {
        term *= (alpha - Rat(k - 1)) * scale;
        term /= Rat(k);
        s.c_[static_cast<std::size_t>(k)] = term;
    }
    return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    if (order() != o.order())
        throw std::invalid_argument("truncation orders differ");
    PowerSeries r(order());
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = c_[i] + o.c_[i];
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    if (order() != o.order())
        throw std::invalid_argument("truncation orders differ");
    PowerSeries r(order());
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = c_[i] - o.c_[i];
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    if (order() != o.order())
        throw std::invalid_argument("truncation orders differ");
    PowerSeries r(order());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) {
            if (o.c_[j] == 0)
                continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

PowerSeries PowerSeries::shifted(int j) const {
    if (j < 0)
        throw std::invalid_argument("shift must be nonnegative");
    PowerSeries r(order());
    for (std::size_t i = 0; i + static_cast<std::size_t>(j) < c_.size(); ++i)
        r.c_[i + static_cast<std::size_t>(j)] = c_[i];
    return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    if (order() != inner.order())
        throw std::invalid_argument("truncation orders differ");
    if (inner.c_[0] != 0)
        throw std::invalid_argument("inner series must have zero constant term");
    // Horner evaluation: f(g) = c_0 + g*(c_1 + g*(c_2 + ...))
    PowerSeries acc(order());
    for (int i = order(); i >= 0; --i) {
        acc = acc * inner;
        acc.c_[0] += c_[static_cast<std::size_t>(i)];
    }
    return acc;
}

PowerSeries PowerSeries::pow_rational(const Rat& alpha) const {
    if (c_[0] != 1)
        throw std::invalid_argument("base series must have constant term 1");
    PowerSeries delta = *this;
    delta.c_[0] = 0;
    // (1+d)^alpha = sum_k genbinom(alpha,k) d^k; d is nilpotent past the order
    PowerSeries acc(order());
    PowerSeries dpow(order());
    dpow.c_[0] = 1;
    for (int k = 0; k <= order(); ++k) {
        Rat g = generalized_binomial(alpha, k);
        if (g != 0)
            for (std::size_t i = 0; i < c_.size(); ++i)
                acc.c_[i] += g * dpow.c_[i];
        if (k < order())
            dpow = dpow * delta;
    }
    return acc;
}

PowerSeries codimension_series(int order) {
    PowerSeries g = PowerSeries::binomial_series(make_rat(-1, 2), Rat(-4), order);
    return g.shifted(1);
}

} // namespace novikov
