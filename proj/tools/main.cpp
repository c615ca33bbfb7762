#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "novikov/basis.hpp"
#include "novikov/checks.hpp"
#include "novikov/combinatorics.hpp"
#include "novikov/diffpoly.hpp"
#include "novikov/errors.hpp"
#include "novikov/realization.hpp"
#include "novikov/term.hpp"
#include "novikov/young.hpp"

namespace {

using nlohmann::json;
using namespace novikov;

struct Options {
    std::string format = "text";
    std::string out;
    std::uint64_t seed = 0;
    std::string alphabet_spec;
};

Alphabet resolve_alphabet(const Options& opts, std::size_t default_size) {
    if (opts.alphabet_spec.empty())
        return Alphabet::prefix(default_size);
    std::vector<std::string> names;
    std::stringstream ss(opts.alphabet_spec);
    std::string item;
    while (std::getline(ss, item, ','))
        names.push_back(item);
    return Alphabet(std::move(names));
}

std::vector<std::string> split_letters(const std::string& spec) {
    std::vector<std::string> letters;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        letters.push_back(item);
    return letters;
}

void emit(const Options& opts, const std::string& payload) {
    if (opts.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f)
        throw Error("cannot open output file " + opts.out);
    f << payload;
}

// r/10^6 rendered with six decimal places
std::string decimal6(const Rat& r) {
    Int scaled = r.get_num() * pow10(6) / r.get_den();
    std::string digits = to_string(scaled);
    bool negative = !digits.empty() && digits[0] == '-';
    if (negative)
        digits = digits.substr(1);
    while (digits.size() < 7)
        digits = "0" + digits;
    std::string out = digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
    return negative ? "-" + out : out;
}

int cmd_dim(const Options& opts, long n) {
    Int d = dim_polylinear(n);
    if (opts.format == "json") {
        json j = {{"n", n}, {"dim", to_string(d)}};
        emit(opts, j.dump() + "\n");
    } else {
        emit(opts, to_string(d) + "\n");
    }
    return 0;
}

int cmd_basis(const Options& opts, long n) {
    Alphabet alphabet = resolve_alphabet(opts, static_cast<std::size_t>(n));
    if (alphabet.size() < static_cast<std::size_t>(n))
        throw std::invalid_argument("alphabet smaller than requested degree");
    std::vector<std::string> letters(alphabet.letters().begin(),
                                     alphabet.letters().begin() + n);
    auto basis = basis_of_multidegree(letters, alphabet);
    if (opts.format == "json") {
        json arr = json::array();
        for (const auto& elem : basis)
            arr.push_back({{"tableau", elem.tableau.to_json()}, {"term", term_to_json(elem.term)}});
        emit(opts, arr.dump() + "\n");
    } else {
        std::string out;
        for (const auto& elem : basis)
            out += elem.term.str() + "\n";
        emit(opts, out);
    }
    return 0;
}

int cmd_tableaux(const Options& opts, long n, const std::string& letters_spec) {
    Alphabet alphabet = resolve_alphabet(opts, static_cast<std::size_t>(n));
    std::vector<std::string> letters;
    if (letters_spec.empty()) {
        if (alphabet.size() < static_cast<std::size_t>(n))
            throw std::invalid_argument("alphabet smaller than requested degree");
        letters.assign(alphabet.letters().begin(), alphabet.letters().begin() + n);
    } else {
        letters = split_letters(letters_spec);
    }
    auto tableaux = enumerate_tableaux(static_cast<int>(n), letters, alphabet);
    if (opts.format == "json") {
        json arr = json::array();
        for (const auto& t : tableaux)
            arr.push_back(t.to_json());
        emit(opts, arr.dump() + "\n");
    } else if (opts.format == "csv") {
        std::string out = "shape;rows;nose\n";
        for (const auto& t : tableaux)
            out += t.to_csv_line() + "\n";
        emit(opts, out);
    } else {
        std::string out;
        for (const auto& t : tableaux)
            out += t.str() + "\n";
        emit(opts, out);
    }
    return 0;
}

int cmd_expand(const Options& opts, const std::string& term_text) {
    Alphabet alphabet = resolve_alphabet(opts, 26);
    Term t = parse_term(term_text, alphabet);
    DiffPolynomial e = expand(t);
    if (opts.format == "json")
        emit(opts, e.to_json().dump() + "\n");
    else
        emit(opts, e.str() + "\n");
    return 0;
}

int cmd_normalize(const Options& opts, const std::string& term_text) {
    Alphabet alphabet = resolve_alphabet(opts, 26);
    Term t = parse_term(term_text, alphabet);
    Normalizer normalizer(alphabet);
    CoordinateVector cv = normalizer.normalize(t);
    if (opts.format == "json") {
        json coords = json::array();
        for (std::size_t i = 0; i < cv.coords.size(); ++i) {
            if (cv.coords[i] == 0)
                continue;
            coords.push_back({{"index", i},
                              {"coeff", to_string(cv.coords[i])},
                              {"term", (*cv.basis)[i].term.str()}});
        }
        json j = {{"dim", cv.coords.size()}, {"coordinates", std::move(coords)}};
        emit(opts, j.dump() + "\n");
    } else {
        std::string out;
        for (std::size_t i = 0; i < cv.coords.size(); ++i) {
            if (cv.coords[i] == 0)
                continue;
            out += to_string(cv.coords[i]) + " * " + (*cv.basis)[i].term.str() + "\n";
        }
        if (out.empty())
            out = "0\n";
        emit(opts, out);
    }
    return 0;
}

int cmd_verify(const Options& opts, int max_n, int independence_max) {
    VerifyOptions vopts;
    vopts.max_n = max_n;
    vopts.seed = opts.seed;
    vopts.independence_max = independence_max;
    auto results = run_verification(vopts);
    bool all_pass = true;
    if (opts.format == "json") {
        // no timings here: JSON output is byte-stable for fixed flags + seed
        json arr = json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            arr.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        json j = {{"max_n", max_n}, {"seed", opts.seed}, {"pass", all_pass},
                  {"results", std::move(arr)}};
        emit(opts, j.dump() + "\n");
    } else {
        std::string out;
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            out += std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.name + ": " + r.detail + "\n";
        }
        out += all_pass ? "all checks passed\n" : "CHECKS FAILED\n";
        emit(opts, out);
    }
    return all_pass ? 0 : 1;
}

int cmd_gf(const Options& opts, int order) {
    PowerSeries s = codimension_series(order);
    if (opts.format == "json") {
        json arr = json::array();
        for (int i = 0; i <= order; ++i)
            arr.push_back(to_string(s.coeff(i)));
        emit(opts, arr.dump() + "\n");
    } else if (opts.format == "csv") {
        std::string out = "n,coefficient\n";
        for (int i = 0; i <= order; ++i)
            out += std::to_string(i) + "," + to_string(s.coeff(i)) + "\n";
        emit(opts, out);
    } else {
        std::string out;
        for (int i = 0; i <= order; ++i)
            out += std::to_string(i) + " " + to_string(s.coeff(i)) + "\n";
        emit(opts, out);
    }
    return 0;
}

int cmd_lemmas(const Options& opts, int max_n) {
    bool pass = true;
    std::string failure;

    for (long n = 1; n <= max_n && pass; ++n) {
        if (partition_binomial_convolution(n) != binomial(2 * n - 2, n - 1)) {
            pass = false;
            failure = "partition-binomial convolution fails at n=" + std::to_string(n);
        }
    }
    for (long n = 2; n <= std::min(max_n, 20) && pass; ++n)
        for (long s = 1; s <= n - 1 && pass; ++s) {
            auto [lhs, rhs] = partition_multinomial_sum(n, s);
            if (lhs != rhs) {
                pass = false;
                failure = "multinomial sum fails at n=" + std::to_string(n) +
                          " s=" + std::to_string(s);
            }
        }

    struct Row {
        long n;
        Int dim;
        Rat lower;
        Int upper;
        Rat estimate;
    };
    std::vector<Row> rows;
    for (long n = 2; n <= max_n; ++n) {
        CentralBinomialBounds b = central_binomial_bounds(n);
        if (!(b.lower <= Rat(b.value) && b.value <= b.upper)) {
            pass = false;
            failure = "sandwich bounds fail at n=" + std::to_string(n);
            break;
        }
        rows.push_back({n, b.value, b.lower, b.upper, exponent_estimate(n)});
    }

    if (opts.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n},
                           {"dim", to_string(r.dim)},
                           {"lower", to_string(r.lower)},
                           {"upper", to_string(r.upper)},
                           {"root_estimate", decimal6(r.estimate)}});
        json j = {{"max_n", max_n}, {"pass", pass}, {"rows", std::move(arr)}};
        if (!pass)
            j["failure"] = failure;
        emit(opts, j.dump() + "\n");
    } else if (opts.format == "csv") {
        std::string out = "n,dim,lower,upper,root_estimate\n";
        for (const auto& r : rows)
            out += std::to_string(r.n) + "," + to_string(r.dim) + "," + to_string(r.lower) + "," +
                   to_string(r.upper) + "," + decimal6(r.estimate) + "\n";
        emit(opts, out);
    } else {
        std::string out;
        for (const auto& r : rows)
            out += "n=" + std::to_string(r.n) + " dim=" + to_string(r.dim) +
                   " lower=" + to_string(r.lower) + " upper=" + to_string(r.upper) +
                   " root=" + decimal6(r.estimate) + "\n";
        out += pass ? "identities hold exactly\n" : ("FAIL: " + failure + "\n");
        emit(opts, out);
    }
    return pass ? 0 : 1;
}

int cmd_exp(const Options& opts, long n) {
    Rat est = exponent_estimate(n);
    if (opts.format == "json") {
        json j = {{"n", n}, {"estimate", to_string(est)}, {"decimal", decimal6(est)}};
        emit(opts, j.dump() + "\n");
    } else {
        emit(opts, decimal6(est) + "\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"free Novikov algebra toolkit: tableau bases, differential "
                 "realization, codimension combinatorics"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", opts.out, "write output to a file instead of stdout");
    app.add_option("--seed", opts.seed, "seed for sampled checks");
    app.add_option("--alphabet", opts.alphabet_spec, "comma-separated generator names");

    long dim_n = 0;
    auto* dim = app.add_subcommand("dim", "dimension of the degree-n polylinear part");
    dim->add_option("n", dim_n, "degree")->required()->check(CLI::PositiveNumber);

    long basis_n = 0;
    bool basis_json = false;
    auto* basis = app.add_subcommand("basis", "tableau basis of the degree-n polylinear part");
    basis->add_option("n", basis_n, "degree")->required()->check(CLI::PositiveNumber);
    basis->add_flag("--json", basis_json, "shorthand for --format json");

    long tab_n = 0;
    std::string tab_letters;
    auto* tableaux = app.add_subcommand("tableaux", "Novikov tableaux of degree n");
    tableaux->add_option("n", tab_n, "degree")->required()->check(CLI::PositiveNumber);
    tableaux->add_option("--letters", tab_letters,
                         "comma-separated letter multiset (defaults to the first n letters)");

    std::string expand_text;
    auto* expand_cmd = app.add_subcommand("expand", "differential expansion of a term");
    expand_cmd->add_option("term", expand_text, "term, e.g. \"(a*(b*c))\"")->required();

    std::string normalize_text;
    auto* normalize_cmd =
        app.add_subcommand("normalize", "coordinates of a term in the tableau basis");
    normalize_cmd->add_option("term", normalize_text, "term, e.g. \"((a*b)*c)\"")->required();

    int verify_max_n = 5;
    int verify_independence_max = 0;
    auto* verify = app.add_subcommand("verify", "run the aggregate verification suites");
    verify->add_option("--max-n", verify_max_n, "cap for the enumeration-based suites")
        ->check(CLI::Range(1, 10));
    verify
        ->add_option("--independence-max", verify_independence_max,
                     "explicit cap for the independence ranks (n=8 is opt-in)")
        ->check(CLI::Range(1, 8));

    int gf_order = 0;
    auto* gf = app.add_subcommand("gf", "generating function coefficients");
    gf->add_option("N", gf_order, "truncation order")->required()->check(CLI::NonNegativeNumber);

    int lemmas_max_n = 30;
    auto* lemmas = app.add_subcommand("lemmas", "combinatorial identities and bounds table");
    lemmas->add_option("--max-n", lemmas_max_n, "largest n in the table")->check(CLI::Range(2, 2000));

    long exp_n = 0;
    auto* exp_cmd = app.add_subcommand("exp", "n-th root estimate of the dimension");
    exp_cmd->add_option("n", exp_n, "degree")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (basis_json)
            opts.format = "json";
        if (dim->parsed())
            return cmd_dim(opts, dim_n);
        if (basis->parsed())
            return cmd_basis(opts, basis_n);
        if (tableaux->parsed())
            return cmd_tableaux(opts, tab_n, tab_letters);
        if (expand_cmd->parsed())
            return cmd_expand(opts, expand_text);
        if (normalize_cmd->parsed())
            return cmd_normalize(opts, normalize_text);
        if (verify->parsed())
            return cmd_verify(opts, verify_max_n, verify_independence_max);
        if (gf->parsed())
            return cmd_gf(opts, gf_order);
        if (lemmas->parsed())
            return cmd_lemmas(opts, lemmas_max_n);
        if (exp_cmd->parsed())
            return cmd_exp(opts, exp_n);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegreeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
