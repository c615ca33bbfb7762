#ifndef NOVIKOV_ALPHABET_HPP
#define NOVIKOV_ALPHABET_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace novikov {

/*
 * An ordered set of generator names. The position in the sequence is the
 * strict total order used by the tableau filling rules. Names must be
 * nonempty, unique, and free of whitespace, parentheses and the product
 * symbols '*' / U+2218, so that every name is a single parser token.
 */
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> letters);

    // "a","b",...,"z" for n <= 26, otherwise "x1".."xn".
    static Alphabet prefix(std::size_t n);

    std::size_t size() const { return letters_.size(); }
    const std::string& letter(std::size_t i) const { return letters_.at(i); }
    const std::vector<std::string>& letters() const { return letters_; }

    std::optional<std::size_t> index(std::string_view name) const;

    // Position of a known letter; throws UnknownLetter otherwise.
    std::size_t rank(const std::string& name) const;

    bool less(const std::string& a, const std::string& b) const { return rank(a) < rank(b); }
    bool contains(std::string_view name) const { return index(name).has_value(); }

private:
    std::vector<std::string> letters_;
};

} // namespace novikov

#endif // NOVIKOV_ALPHABET_HPP
