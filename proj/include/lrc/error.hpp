#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

// io and format map to CLI exit code 2, precondition to 3.
enum class ErrorKind {
    io,
    format,
    precondition,
    invalid_argument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace lrc
