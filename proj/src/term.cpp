#include "novikov/term.hpp"

#include <algorithm>
#include <stdexcept>

#include "novikov/errors.hpp"

namespace novikov {

Term Term::leaf(const std::string& letter) {
    auto n = std::make_shared<Node>();
    n->leaf_letter = letter;
    n->degree = 1;
    n->text = letter;
    return Term(std::move(n));
}

Term Term::product(const Term& left, const Term& right) {
    auto n = std::make_shared<Node>();
    n->left = left.node_;
    n->right = right.node_;
    n->degree = left.degree() + right.degree();
    n->text = "(" + left.str() + "*" + right.str() + ")";
    return Term(std::move(n));
}

const std::string& Term::letter() const {
    if (!is_leaf())
        throw std::logic_error("letter() called on a product term");
    return node_->leaf_letter;
}

Term Term::left() const {
    if (is_leaf())
        throw std::logic_error("left() called on a leaf");
    return Term(node_->left);
}

Term Term::right() const {
    if (is_leaf())
        throw std::logic_error("right() called on a leaf");
    return Term(node_->right);
}

namespace {

void collect_letters(const Term& t, std::map<std::string, int>& out) {
    if (t.is_leaf()) {
        out[t.letter()] += 1;
        return;
    }
    collect_letters(t.left(), out);
    collect_letters(t.right(), out);
}

} // namespace

std::map<std::string, int> Term::letter_multiset() const {
    std::map<std::string, int> out;
    collect_letters(*this, out);
    return out;
}

bool Term::is_polylinear() const {
    for (const auto& [letter, count] : letter_multiset())
        if (count != 1)
            return false;
    return true;
}

namespace {

// Recursive-descent parser over the fixed grammar. Tracks byte offsets for
// error reporting. The product symbol is '*' or the UTF-8 sequence for
// U+2218.
class Parser {
public:
    Parser(const std::string& text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    Term run() {
        Term t = parse_term();
        skip_ws();
        if (pos_ != text_.size()) {
            if (text_[pos_] == ')')
                throw UnbalancedParens("unmatched closing parenthesis", pos_);
            throw SyntaxError("unexpected trailing input", pos_);
        }
        return t;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_product_symbol() const {
        if (pos_ < text_.size() && text_[pos_] == '*')
            return true;
        return text_.compare(pos_, 3, "\xe2\x88\x98") == 0;
    }

    void consume_product_symbol() { pos_ += text_[pos_] == '*' ? 1 : 3; }

    static bool is_letter_char(char c) {
        return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '*';
    }

    Term parse_term() {
        skip_ws();
        if (pos_ == text_.size())
            throw SyntaxError("unexpected end of input, expected a term", pos_);
        if (text_[pos_] == ')')
            throw UnbalancedParens("unmatched closing parenthesis", pos_);
        if (text_[pos_] == '(') {
            std::size_t open = pos_++;
            Term lhs = parse_term();
            skip_ws();
            if (pos_ == text_.size())
                throw UnbalancedParens("missing closing parenthesis", open);
            if (!at_product_symbol())
                throw SyntaxError("expected '*' between factors", pos_);
            consume_product_symbol();
            Term rhs = parse_term();
            skip_ws();
            if (pos_ == text_.size())
                throw UnbalancedParens("missing closing parenthesis", open);
            if (text_[pos_] != ')')
                throw SyntaxError("expected closing parenthesis", pos_);
            ++pos_;
            return Term::product(lhs, rhs);
        }
        return parse_letter();
    }

    Term parse_letter() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_letter_char(text_[pos_])) {
            if (text_.compare(pos_, 3, "\xe2\x88\x98") == 0)
                break;
            ++pos_;
        }
        if (pos_ == start)
            throw SyntaxError("expected a letter", start);
        std::string name = text_.substr(start, pos_ - start);
        if (!alphabet_.contains(name))
            throw UnknownLetter(name, start);
        return Term::leaf(name);
    }

    const std::string& text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

Term parse_term(const std::string& text, const Alphabet& alphabet) {
    return Parser(text, alphabet).run();
}

nlohmann::json term_to_json(const Term& t) {
    if (t.is_leaf())
        return t.letter();
    return nlohmann::json::array({term_to_json(t.left()), term_to_json(t.right())});
}

Term term_from_json(const nlohmann::json& j, const Alphabet& alphabet) {
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        if (!alphabet.contains(name))
            throw UnknownLetter(name);
        return Term::leaf(name);
    }
    if (j.is_array() && j.size() == 2)
        return Term::product(term_from_json(j[0], alphabet), term_from_json(j[1], alphabet));
    throw SyntaxError("term JSON must be a letter or a two-element array", 0);
}

TermPolynomial::TermPolynomial(const Term& t, const Rat& coeff) { add(t, coeff); }

void TermPolynomial::add(const Term& t, const Rat& coeff) {
    if (coeff == 0)
        return;
    if (!coeffs_.empty()) {
        const Term& witness = coeffs_.begin()->first;
        if (witness.letter_multiset() != t.letter_multiset())
            throw Error("term polynomial must stay within one multidegree: cannot add " +
                        t.str() + " to a polynomial in another multidegree");
    }
    auto it = coeffs_.find(t);
    if (it == coeffs_.end()) {
        coeffs_.emplace(t, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        coeffs_.erase(it);
}

TermPolynomial TermPolynomial::operator+(const TermPolynomial& o) const {
    TermPolynomial r = *this;
    for (const auto& [t, c] : o.coeffs_)
        r.add(t, c);
    return r;
}

TermPolynomial TermPolynomial::operator-(const TermPolynomial& o) const {
    TermPolynomial r = *this;
    for (const auto& [t, c] : o.coeffs_)
        r.add(t, -c);
    return r;
}

TermPolynomial TermPolynomial::operator*(const Rat& scalar) const {
    TermPolynomial r;
    if (scalar == 0)
        return r;
    for (const auto& [t, c] : coeffs_)
        r.add(t, c * scalar);
    return r;
}

std::map<std::string, int> TermPolynomial::letter_multiset() const {
    if (coeffs_.empty())
        return {};
    return coeffs_.begin()->first.letter_multiset();
}

std::string TermPolynomial::str() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : coeffs_) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0)
                out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1)
            out += to_string(mag) + "*";
        out += t.str();
    }
    return out;
}

TermPolynomial associator(const Term& a, const Term& b, const Term& c) {
    TermPolynomial p;
    p.add(Term::product(a, Term::product(b, c)), Rat(1));
    p.add(Term::product(Term::product(a, b), c), Rat(-1));
    return p;
}

std::pair<TermPolynomial, TermPolynomial> novikov_identity_defects(const Term& a, const Term& b,
                                                                   const Term& c) {
    TermPolynomial first = associator(a, b, c) - associator(a, c, b);
    TermPolynomial second;
    second.add(Term::product(a, Term::product(b, c)), Rat(1));
    second.add(Term::product(b, Term::product(a, c)), Rat(-1));
    return {std::move(first), std::move(second)};
}

namespace {

// all tree shapes over the given slice of letters
void build_trees(const std::vector<std::string>& letters, std::size_t lo, std::size_t hi,
                 std::vector<Term>& out) {
    if (hi - lo == 1) {
        out.push_back(Term::leaf(letters[lo]));
        return;
    }
    for (std::size_t split = lo + 1; split < hi; ++split) {
        std::vector<Term> lefts, rights;
        build_trees(letters, lo, split, lefts);
        build_trees(letters, split, hi, rights);
        for (const Term& l : lefts)
            for (const Term& r : rights)
                out.push_back(Term::product(l, r));
    }
}

} // namespace

std::vector<Term> enumerate_all_polylinear_terms(int n, const Alphabet& alphabet) {
    if (n < 1)
        throw std::invalid_argument("degree must be >= 1");
    if (static_cast<std::size_t>(n) > alphabet.size())
        throw std::invalid_argument("alphabet too small for requested degree");
    std::vector<std::string> letters(alphabet.letters().begin(), alphabet.letters().begin() + n);
    std::sort(letters.begin(), letters.end());
    std::vector<Term> out;
    do {
        build_trees(letters, 0, letters.size(), out);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

} // namespace novikov
