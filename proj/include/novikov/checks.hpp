#ifndef NOVIKOV_CHECKS_HPP
#define NOVIKOV_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "novikov/alphabet.hpp"
#include "novikov/term.hpp"

namespace novikov {

/*
 * Deterministic generator (splitmix64) so that sampled suites reproduce
 * byte-identically for a given seed on every platform.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

// uniformly shaped random product of `degree` leaves drawn from `letters`
Term random_term(Rng& rng, int degree, const std::vector<std::string>& letters);

// random degree-n product using each of the first n alphabet letters once
Term random_polylinear_term(Rng& rng, int n, const Alphabet& alphabet);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    long millis = 0;
};

// tableau enumeration count == C(2n-2, n-1) for n = 1..nmax
CheckResult check_dimension_vs_enumeration(int nmax);

// the degree-4 polylinear basis equals the known 20 monomials
CheckResult check_basis_degree4_golden();

// per-shape closed-form counts match enumeration for n <= nmax
CheckResult check_shape_counts(int nmax);

// identity defects vanish: exhaustive leaf triples plus sampled compounds
CheckResult check_identities(std::uint64_t seed, int samples, int max_total_degree);

// rank of the basis matrix == dim N_n for n = 1..nmax
CheckResult check_independence(int nmax);

// rank of all polylinear monomial expansions == dim N_n for n = 2..nmax
CheckResult check_spanning(int nmax);

// partition-multinomial convolution equals the central binomial, n <= nmax
CheckResult check_partition_convolution(int nmax);

// 2^(2n-3)/(n-1) <= C(2n-2,n-1) <= 2^(2n-2) for n = 2..nmax
CheckResult check_sandwich_bounds(int nmax);

// growth-exponent witness: estimate at n=200 inside (3.8, 4.0), bracketed
// by the exact sandwich-bound roots, bracket width < 1/4
CheckResult check_exponent_witness();

// series coefficients of x(1-4x)^(-1/2) match dim N_n pointwise
CheckResult check_generating_function(int order);

// unit coordinates on basis elements (n <= unit_nmax) and exact
// reconstruction on sampled polylinear terms (degree <= recon_maxdeg)
CheckResult check_normalization(std::uint64_t seed, int samples, int unit_nmax, int recon_maxdeg);

// single-letter tableau counts equal partition numbers p(n-1), n <= nmax
CheckResult check_one_letter_counts(int nmax);

// parse/print round trip on random trees
CheckResult check_parse_print_roundtrip(std::uint64_t seed, int samples, int max_degree);

// polylinear monomial census: n! * Catalan(n-1) for n <= nmax
CheckResult check_polylinear_census(int nmax);

// order-preserving relabeling maps the tableau set bijectively
CheckResult check_relabeling_equivariance();

// Vandermonde convolution, exhaustive over small arguments
CheckResult check_vandermonde(int maxarg);

// fixed-part-count multinomial sums against their closed form
CheckResult check_partition_multinomial_sums(int nmax);

// normalize is a projection: reconstruct then normalize is the identity
CheckResult check_projection(std::uint64_t seed, int samples, int max_degree);

struct VerifyOptions {
    int max_n = 5;
    std::uint64_t seed = 0;
    int identity_samples = 1000;
    int normalize_samples = 200;
    // 0: follow max_n, capped at 7; the 3432x3432 case at n=8 is opt-in
    int independence_max = 0;
};

// the aggregate suite behind `verify`; caps clamp the expensive checks
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

} // namespace novikov

#endif // NOVIKOV_CHECKS_HPP
