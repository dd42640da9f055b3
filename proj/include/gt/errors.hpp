#pragma once

#include <stdexcept>
#include <string>

namespace gt {

enum class ErrorKind {
    IndexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    SyntaxError,
    NotAPermutation,
    TooLarge,
    YellowForbidden,
    YellowNotAllowed,
    BadParam,
    ConfigError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace gt
