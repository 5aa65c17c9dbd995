#ifndef MZVFRAC_ERROR_HPP
#define MZVFRAC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace mzvfrac {

enum class ErrorCode {
    NotAdmissible,
    VariableCollision,
    UnitInDomainOfP0,
    NotInDomain,
    NonPositiveRate,
    UnboundVariable,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised by the literal parsers; `position` is the 0-based offset of the
// offending character in the input.
class ParseError : public Error {
public:
    ParseError(std::string input, std::size_t position, const std::string& what)
        : Error(ErrorCode::ParseError, what), input_(std::move(input)), position_(position),
          message_(what) {}

    const std::string& input() const noexcept { return input_; }
    std::size_t position() const noexcept { return position_; }
    const std::string& message() const noexcept { return message_; }

    // Two-line rendering of the input with a caret under the bad character.
    std::string caret_diagnostic() const;

private:
    std::string input_;
    std::size_t position_;
    std::string message_;
};

}  // namespace mzvfrac

#endif  // MZVFRAC_ERROR_HPP
