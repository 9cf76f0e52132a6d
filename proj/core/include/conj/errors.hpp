#pragma once

#include <stdexcept>
#include <string>

namespace gmc {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input: words, manifests, numbers.
class ParseError : public Error {
public:
    using Error::Error;
};

class UnknownGenerator : public ParseError {
public:
    explicit UnknownGenerator(const std::string& name)
        : ParseError("unknown generator '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// A caller broke a documented precondition.
class ContractViolation : public Error {
public:
    using Error::Error;
};

// Well-formed input that describes an invalid mathematical object.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace gmc
