#ifndef NOVIKOV_ERRORS_HPP
#define NOVIKOV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace novikov {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Term-grammar errors carry the byte offset of the offending position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

class UnbalancedParens : public ParseError {
public:
    using ParseError::ParseError;
};

class UnknownLetter : public ParseError {
public:
    explicit UnknownLetter(const std::string& name, std::size_t offset = 0)
        : ParseError("unknown letter '" + name + "'", offset) {}
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class InvalidTableau : public Error {
public:
    using Error::Error;
};

class MultinomialMismatch : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class InconsistentSystem : public Error {
public:
    using Error::Error;
};

class RankDeficient : public Error {
public:
    using Error::Error;
};

} // namespace novikov

#endif // NOVIKOV_ERRORS_HPP
