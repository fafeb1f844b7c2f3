#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dwig {

// Base for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dimension_error : public error {
public:
    using error::error;
};

class domain_error : public error {
public:
    using error::error;
};

// Malformed text input; the message carries the line or field at fault.
class parse_error : public error {
public:
    using error::error;
};

// Rejection of an input that fails one or more invariants; issues lists each
// violated invariant together with the measured magnitude.
class validation_error : public error {
public:
    validation_error(const std::string& what, std::vector<std::string> issues)
        : error(what), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

}  // namespace dwig
