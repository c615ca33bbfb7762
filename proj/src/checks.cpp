#include "novikov/checks.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "novikov/basis.hpp"
#include "novikov/combinatorics.hpp"
#include "novikov/diffpoly.hpp"
#include "novikov/errors.hpp"
#include "novikov/linalg.hpp"
#include "novikov/realization.hpp"
#include "novikov/young.hpp"

namespace novikov {

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

Term random_term(Rng& rng, int degree, const std::vector<std::string>& letters) {
    if (degree <= 1)
        return Term::leaf(letters[rng.below(letters.size())]);
    int split = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(degree - 1)));
    Term l = random_term(rng, split, letters);
    Term r = random_term(rng, degree - split, letters);
    return Term::product(l, r);
}

namespace {

Term random_tree_over(Rng& rng, const std::vector<std::string>& leaves, std::size_t lo,
                      std::size_t hi) {
    if (hi - lo == 1)
        return Term::leaf(leaves[lo]);
    std::size_t split = lo + 1 + rng.below(hi - lo - 1);
    return Term::product(random_tree_over(rng, leaves, lo, split),
                         random_tree_over(rng, leaves, split, hi));
}

} // namespace

Term random_polylinear_term(Rng& rng, int n, const Alphabet& alphabet) {
    std::vector<std::string> leaves(alphabet.letters().begin(), alphabet.letters().begin() + n);
    for (std::size_t i = leaves.size(); i > 1; --i)
        std::swap(leaves[i - 1], leaves[rng.below(i)]);
    return random_tree_over(rng, leaves, 0, leaves.size());
}

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long millis() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return static_cast<long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
    }

private:
    std::chrono::steady_clock::time_point start_;
};

CheckResult finish(const std::string& name, bool pass, const std::string& detail,
                   const Timer& timer) {
    return {name, pass, detail, timer.millis()};
}

// standalone partition counter, independent of the shape enumerator
long count_partitions(int remaining, int max_part) {
    if (remaining == 0)
        return 1;
    long total = 0;
    for (int p = std::min(remaining, max_part); p >= 1; --p)
        total += count_partitions(remaining - p, p);
    return total;
}

const std::vector<std::string>& degree4_basis_strings() {
    static const std::vector<std::string> strings = {
        "(a*(b*(c*d)))", "(a*(b*(d*c)))", "(a*(c*(d*b)))", "(b*(c*(d*a)))",
        "(a*((b*c)*d))", "(a*((c*b)*d))", "(a*((d*b)*c))",
        "(b*((a*c)*d))", "(b*((c*a)*d))", "(b*((d*a)*c))",
        "(c*((a*b)*d))", "(c*((b*a)*d))", "(c*((d*a)*b))",
        "(d*((a*b)*c))", "(d*((b*a)*c))", "(d*((c*a)*b))",
        "(((a*b)*c)*d)", "(((b*a)*c)*d)", "(((c*a)*b)*d)", "(((d*a)*b)*c)"};
    return strings;
}

} // namespace

CheckResult check_dimension_vs_enumeration(int nmax) {
    Timer timer;
    std::ostringstream detail;
    for (int n = 1; n <= nmax; ++n) {
        Alphabet alphabet = Alphabet::prefix(static_cast<std::size_t>(n));
        auto tableaux = enumerate_tableaux(n, alphabet.letters(), alphabet);
        for (const auto& t : tableaux) {
            auto check = validate_tableau(t, alphabet);
            if (!check.ok)
                return finish("tableau count vs dimension formula", false,
                              "invalid tableau emitted at n=" + std::to_string(n) + ": " +
                                  check.violation,
                              timer);
        }
        Int expected = dim_polylinear(n);
        if (Int(static_cast<long>(tableaux.size())) != expected)
            return finish("tableau count vs dimension formula", false,
                          "n=" + std::to_string(n) + ": enumerated " +
                              std::to_string(tableaux.size()) + ", formula gives " +
                              to_string(expected),
                          timer);
        if (n > 1)
            detail << " ";
        detail << tableaux.size();
    }
    return finish("tableau count vs dimension formula", true,
                  "n=1.." + std::to_string(nmax) + ": " + detail.str(), timer);
}

CheckResult check_basis_degree4_golden() {
    Timer timer;
    Alphabet alphabet = Alphabet::prefix(4);
    auto basis = basis_of_multidegree(alphabet.letters(), alphabet);
    std::set<std::string> got;
    for (const auto& elem : basis)
        got.insert(elem.term.str());
    std::set<std::string> want(degree4_basis_strings().begin(), degree4_basis_strings().end());
    if (got != want) {
        std::string diff;
        for (const auto& s : want)
            if (!got.count(s))
                diff += " missing " + s;
        for (const auto& s : got)
            if (!want.count(s))
                diff += " extra " + s;
        return finish("degree-4 basis golden set", false, diff, timer);
    }
    return finish("degree-4 basis golden set", true, "all 20 monomials match", timer);
}

CheckResult check_shape_counts(int nmax) {
    Timer timer;
    for (int n = 1; n <= nmax; ++n) {
        Alphabet alphabet = Alphabet::prefix(static_cast<std::size_t>(n));
        auto tableaux = enumerate_tableaux(n, alphabet.letters(), alphabet);
        std::map<YoungShape, long> per_shape;
        for (const auto& t : tableaux)
            per_shape[t.shape()] += 1;
        for (const auto& shape : enumerate_young_shapes(n - 1)) {
            Int expected = count_fillings_per_shape(shape, n);
            long got = per_shape.count(shape) ? per_shape[shape] : 0;
            if (Int(got) != expected)
                return finish("per-shape filling counts", false,
                              "n=" + std::to_string(n) + " shape " + shape.str() + ": " +
                                  std::to_string(got) + " enumerated vs " + to_string(expected) +
                                  " closed form",
                              timer);
        }
        if (n == 4) {
            if (per_shape[YoungShape({1, 1, 1})] != 4 || per_shape[YoungShape({2, 1})] != 12 ||
                per_shape[YoungShape({3})] != 4)
                return finish("per-shape filling counts", false,
                              "n=4 shape counts differ from 4/12/4", timer);
        }
    }
    return finish("per-shape filling counts", true,
                  "closed form matches enumeration for n=1.." + std::to_string(nmax), timer);
}

CheckResult check_identities(std::uint64_t seed, int samples, int max_total_degree) {
    Timer timer;
    Alphabet alphabet = Alphabet::prefix(4);
    std::vector<std::tuple<Term, Term, Term>> triples;
    for (const auto& x : alphabet.letters())
        for (const auto& y : alphabet.letters())
            for (const auto& z : alphabet.letters())
                triples.emplace_back(Term::leaf(x), Term::leaf(y), Term::leaf(z));

    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        int total = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                            std::max(1, max_total_degree - 2))));
        int d1 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(total - 2)));
        int d2 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(total - d1 - 1)));
        int d3 = total - d1 - d2;
        triples.emplace_back(random_term(rng, d1, alphabet.letters()),
                             random_term(rng, d2, alphabet.letters()),
                             random_term(rng, d3, alphabet.letters()));
    }

    IdentityReport report = verify_identities_under_realization(triples);
    if (!report.ok())
        return finish("identity defects vanish under the realization", false,
                      std::to_string(report.violations.size()) + " violations, first: " +
                          report.violations.front(),
                      timer);
    return finish("identity defects vanish under the realization", true,
                  std::to_string(report.checked) + " triples checked", timer);
}

CheckResult check_independence(int nmax) {
    Timer timer;
    std::ostringstream detail;
    for (int n = 1; n <= nmax; ++n) {
        Alphabet alphabet = Alphabet::prefix(static_cast<std::size_t>(n));
        SparseIntMatrix m = basis_matrix(n, alphabet);
        long rank = rank_exact(m);
        Int expected = dim_polylinear(n);
        if (Int(rank) != expected)
            return finish("basis expansions are independent", false,
                          "n=" + std::to_string(n) + ": rank " + std::to_string(rank) + " of " +
                              to_string(expected),
                          timer);
        if (n > 1)
            detail << " ";
        detail << rank;
    }
    return finish("basis expansions are independent", true,
                  "ranks for n=1.." + std::to_string(nmax) + ": " + detail.str(), timer);
}

CheckResult check_spanning(int nmax) {
    Timer timer;
    std::ostringstream detail;
    for (int n = 2; n <= nmax; ++n) {
        SpanningReport report = spanning_check(n, nmax);
        if (!report.ok())
            return finish("polylinear monomials span the basis row space", false,
                          "n=" + std::to_string(n) + ": rank " + std::to_string(report.rank) +
                              " of " + to_string(report.expected) + " over " +
                              std::to_string(report.monomial_count) + " monomials",
                          timer);
        if (n > 2)
            detail << " ";
        detail << report.monomial_count << "->" << report.rank;
    }
    return finish("polylinear monomials span the basis row space", true,
                  "n=2.." + std::to_string(nmax) + ": " + detail.str(), timer);
}

CheckResult check_partition_convolution(int nmax) {
    Timer timer;
    for (long n = 1; n <= nmax; ++n) {
        Int lhs = partition_binomial_convolution(n);
        Int rhs = binomial(2 * n - 2, n - 1);
        if (lhs != rhs)
            return finish("partition-binomial convolution identity", false,
                          "n=" + std::to_string(n) + ": " + to_string(lhs) +
                              " != " + to_string(rhs),
                          timer);
    }
    return finish("partition-binomial convolution identity", true,
                  "matches the central binomial for n=1.." + std::to_string(nmax), timer);
}

CheckResult check_sandwich_bounds(int nmax) {
    Timer timer;
    for (long n = 2; n <= nmax; ++n) {
        CentralBinomialBounds b = central_binomial_bounds(n);
        if (!(b.lower <= Rat(b.value) && b.value <= b.upper))
            return finish("central binomial sandwich bounds", false, "fail at n=" + std::to_string(n),
                          timer);
    }
    return finish("central binomial sandwich bounds", true,
                  "hold exactly for n=2.." + std::to_string(nmax), timer);
}

CheckResult check_exponent_witness() {
    Timer timer;
    const Int scale = pow10(6);
    for (long n : {100L, 200L}) {
        CentralBinomialBounds b = central_binomial_bounds(n);
        Int root_value = nth_root_floor_scaled(Rat(b.value), n, scale);
        Int root_lower = nth_root_floor_scaled(b.lower, n, scale);
        Int root_upper = nth_root_floor_scaled(Rat(b.upper), n, scale);
        if (!(root_lower <= root_value && root_value <= root_upper))
            return finish("growth exponent witness", false,
                          "bound roots fail to bracket the estimate at n=" + std::to_string(n),
                          timer);
        if (n == 200) {
            Rat est = exponent_estimate(n);
            if (est != make_rat(root_value, scale))
                return finish("growth exponent witness", false,
                              "estimate disagrees with the scaled root", timer);
            if (!(make_rat(Int(38), Int(10)) < est && est < Rat(4)))
                return finish("growth exponent witness", false,
                              "estimate " + to_string(est) + " outside (3.8, 4.0)", timer);
            if (!(make_rat(root_upper - root_lower, scale) < make_rat(Int(1), Int(4))))
                return finish("growth exponent witness", false,
                              "bracket width not below 1/4", timer);
        }
    }
    Rat est = exponent_estimate(200);
    return finish("growth exponent witness", true,
                  "estimate at n=200 is " + to_string(est.get_num()) + "/10^6, inside (3.8, 4.0)",
                  timer);
}

CheckResult check_generating_function(int order) {
    Timer timer;
    PowerSeries s = codimension_series(order);
    if (s.coeff(0) != 0)
        return finish("generating function coefficients", false, "constant term is nonzero", timer);
    for (int n = 1; n <= order; ++n) {
        if (s.coeff(n) != Rat(dim_polylinear(n)))
            return finish("generating function coefficients", false,
                          "coefficient of x^" + std::to_string(n) + " is " + to_string(s.coeff(n)) +
                              ", expected " + to_string(dim_polylinear(n)),
                          timer);
    }
    return finish("generating function coefficients", true,
                  "first " + std::to_string(order) + " coefficients match the dimension formula",
                  timer);
}

CheckResult check_normalization(std::uint64_t seed, int samples, int unit_nmax, int recon_maxdeg) {
    Timer timer;
    Alphabet alphabet = Alphabet::prefix(static_cast<std::size_t>(std::max(unit_nmax, recon_maxdeg)));
    Normalizer normalizer(alphabet);

    for (int n = 1; n <= unit_nmax; ++n) {
        Alphabet local = Alphabet::prefix(static_cast<std::size_t>(n));
        auto basis = basis_of_multidegree(local.letters(), alphabet);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CoordinateVector cv = normalizer.normalize(basis[i].term);
            for (std::size_t j = 0; j < cv.coords.size(); ++j) {
                if (cv.coords[j] != (i == j ? Rat(1) : Rat(0)))
                    return finish("normal-form coordinates", false,
                                  "basis element " + basis[i].term.str() +
                                      " does not map to its unit vector",
                                  timer);
            }
        }
    }

    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        int degree = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(recon_maxdeg - 1)));
        Term t = random_polylinear_term(rng, degree, alphabet);
        CoordinateVector cv = normalizer.normalize(t);
        auto lhs = expand_rational(cv.reconstruction());
        auto rhs = expand_rational(TermPolynomial(t));
        if (lhs != rhs)
            return finish("normal-form coordinates", false,
                          "reconstruction differs from the expansion for " + t.str(), timer);
    }
    return finish("normal-form coordinates", true,
                  "unit vectors for n<=" + std::to_string(unit_nmax) + ", " +
                      std::to_string(samples) + " exact reconstructions up to degree " +
                      std::to_string(recon_maxdeg),
                  timer);
}

CheckResult check_one_letter_counts(int nmax) {
    Timer timer;
    Alphabet alphabet = Alphabet::prefix(1);
    for (int n = 1; n <= nmax; ++n) {
        std::vector<std::string> letters(static_cast<std::size_t>(n), alphabet.letter(0));
        auto tableaux = enumerate_tableaux(n, letters, alphabet);
        long expected = count_partitions(n - 1, std::max(1, n - 1));
        if (static_cast<long>(tableaux.size()) != expected)
            return finish("single-letter tableau counts", false,
                          "n=" + std::to_string(n) + ": " + std::to_string(tableaux.size()) +
                              " tableaux vs p(n-1)=" + std::to_string(expected),
                          timer);
    }
    return finish("single-letter tableau counts", true,
                  "equal to partition numbers for n=1.." + std::to_string(nmax), timer);
}

CheckResult check_parse_print_roundtrip(std::uint64_t seed, int samples, int max_degree) {
    Timer timer;
    Alphabet alphabet = Alphabet::prefix(6);
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        int degree = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree)));
        Term t = random_term(rng, degree, alphabet.letters());
        Term back = parse_term(t.str(), alphabet);
        if (back != t || back.str() != t.str())
            return finish("parse/print round trip", false, "failed on " + t.str(), timer);
    }
    return finish("parse/print round trip", true, std::to_string(samples) + " random terms", timer);
}

CheckResult check_polylinear_census(int nmax) {
    Timer timer;
    for (int n = 1; n <= nmax; ++n) {
        Alphabet alphabet = Alphabet::prefix(static_cast<std::size_t>(n));
        auto terms = enumerate_all_polylinear_terms(n, alphabet);
        Int expected = factorial(n) * binomial(2 * (n - 1), n - 1) / Int(n);
        std::set<std::string> distinct;
        for (const auto& t : terms)
            distinct.insert(t.str());
        if (Int(static_cast<long>(terms.size())) != expected ||
            distinct.size() != terms.size())
            return finish("polylinear monomial census", false,
                          "n=" + std::to_string(n) + ": " + std::to_string(terms.size()) +
                              " terms, expected " + to_string(expected),
                          timer);
    }
    return finish("polylinear monomial census", true,
                  "n! * Catalan(n-1) distinct monomials for n=1.." + std::to_string(nmax), timer);
}

CheckResult check_relabeling_equivariance() {
    Timer timer;
    Alphabet wide = Alphabet::prefix(5);
    std::vector<std::string> original = {"a", "b", "c", "d"};
    std::vector<std::string> shifted = {"b", "c", "d", "e"};
    auto originals = enumerate_tableaux(4, original, wide);
    auto shifteds = enumerate_tableaux(4, shifted, wide);
    if (originals.size() != shifteds.size())
        return finish("relabeling equivariance", false, "tableau counts differ", timer);

    auto relabel = [](const std::string& s) {
        return std::string(1, static_cast<char>(s[0] + 1));
    };
    std::set<std::string> want;
    for (const auto& t : shifteds)
        want.insert(t.to_csv_line());
    for (const auto& t : originals) {
        std::vector<std::vector<std::string>> rows = t.rows();
        for (auto& row : rows)
            for (auto& e : row)
                e = relabel(e);
        NovikovTableau mapped(t.shape(), rows, relabel(t.nose()));
        if (!want.count(mapped.to_csv_line()))
            return finish("relabeling equivariance", false,
                          "image of " + t.str() + " is not a tableau of the shifted letters",
                          timer);
    }
    return finish("relabeling equivariance", true,
                  "order-preserving relabeling is a bijection on degree-4 tableaux", timer);
}

CheckResult check_vandermonde(int maxarg) {
    Timer timer;
    for (long n = 0; n <= maxarg; ++n)
        for (long p = 0; p <= maxarg; ++p)
            for (long m = 0; m <= maxarg; ++m) {
                auto [lhs, rhs] = vandermonde_convolution(n, p, m);
                if (lhs != rhs)
                    return finish("Vandermonde convolution", false,
                                  "fail at n=" + std::to_string(n) + " p=" + std::to_string(p) +
                                      " m=" + std::to_string(m),
                                  timer);
            }
    return finish("Vandermonde convolution", true,
                  "exhaustive for arguments up to " + std::to_string(maxarg), timer);
}

CheckResult check_partition_multinomial_sums(int nmax) {
    Timer timer;
    for (long n = 2; n <= nmax; ++n)
        for (long s = 1; s <= n - 1; ++s) {
            auto [lhs, rhs] = partition_multinomial_sum(n, s);
            if (lhs != rhs)
                return finish("fixed-part-count multinomial sums", false,
                              "fail at n=" + std::to_string(n) + " s=" + std::to_string(s), timer);
        }
    return finish("fixed-part-count multinomial sums", true,
                  "match the closed form for n=2.." + std::to_string(nmax), timer);
}

CheckResult check_projection(std::uint64_t seed, int samples, int max_degree) {
    Timer timer;
    Alphabet alphabet = Alphabet::prefix(static_cast<std::size_t>(std::max(2, max_degree)));
    Normalizer normalizer(alphabet);
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        int degree = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree - 1)));
        Term t = random_polylinear_term(rng, degree, alphabet);
        CoordinateVector cv = normalizer.normalize(t);
        CoordinateVector again = normalizer.normalize(cv.reconstruction());
        if (cv.coords != again.coords)
            return finish("normalization is a projection", false, "failed on " + t.str(), timer);
    }
    return finish("normalization is a projection", true, std::to_string(samples) + " samples",
                  timer);
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    const int n = opts.max_n;
    std::vector<CheckResult> results;
    results.push_back(check_parse_print_roundtrip(opts.seed, 200, 10));
    results.push_back(check_polylinear_census(std::min(n, 6)));
    results.push_back(check_dimension_vs_enumeration(std::min(n, 10)));
    if (n >= 4)
        results.push_back(check_basis_degree4_golden());
    results.push_back(check_shape_counts(std::min(n, 9)));
    results.push_back(check_one_letter_counts(12));
    results.push_back(check_relabeling_equivariance());
    results.push_back(check_identities(opts.seed, opts.identity_samples, 7));
    results.push_back(check_independence(opts.independence_max > 0 ? opts.independence_max
                                                                   : std::min(n, 7)));
    if (n >= 2)
        results.push_back(check_spanning(std::min(n, 6)));
    results.push_back(check_normalization(opts.seed, opts.normalize_samples, std::min(n, 5),
                                          std::min(n, 6)));
    results.push_back(check_projection(opts.seed, 20, std::min(n, 5)));
    results.push_back(check_partition_convolution(30));
    results.push_back(check_partition_multinomial_sums(20));
    results.push_back(check_vandermonde(12));
    results.push_back(check_sandwich_bounds(500));
    results.push_back(check_exponent_witness());
    results.push_back(check_generating_function(30));
    return results;
}

} // namespace novikov
