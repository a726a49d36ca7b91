#pragma once

#include <stdexcept>
#include <string>

namespace siqkd {

// Physically impossible source parameters, e.g. mean > 1 with small g2.
class InvalidSource : public std::domain_error {
public:
    explicit InvalidSource(const std::string& msg) : std::domain_error(msg) {}
};

class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

class CutoffTooSmall : public std::domain_error {
public:
    explicit CutoffTooSmall(const std::string& msg) : std::domain_error(msg) {}
};

class ModeMismatch : public std::logic_error {
public:
    explicit ModeMismatch(const std::string& msg) : std::logic_error(msg) {}
};

class NoConvergence : public std::runtime_error {
public:
    explicit NoConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace siqkd
