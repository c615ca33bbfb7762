#include "novikov/alphabet.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

#include "novikov/errors.hpp"

namespace novikov {

namespace {

bool valid_letter_name(const std::string& name) {
    if (name.empty())
        return false;
    for (unsigned char c : name) {
        if (std::isspace(c) || c == '(' || c == ')' || c == '*')
            return false;
    }
    // the unicode product sign, accepted as an input alias for '*'
    if (name.find("\xe2\x88\x98") != std::string::npos)
        return false;
    return true;
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    std::set<std::string> seen;
    for (const auto& name : letters_) {
        if (!valid_letter_name(name))
            throw std::invalid_argument("invalid letter name '" + name + "'");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate letter name '" + name + "'");
    }
}

Alphabet Alphabet::prefix(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    if (n <= 26) {
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
        for (std::size_t i = 1; i <= n; ++i)
            names.push_back("x" + std::to_string(i));
    }
    return Alphabet(std::move(names));
}

std::optional<std::size_t> Alphabet::index(std::string_view name) const {
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i] == name)
            return i;
    return std::nullopt;
}

std::size_t Alphabet::rank(const std::string& name) const {
    if (auto i = index(name))
        return *i;
    throw UnknownLetter(name);
}

} // namespace novikov
