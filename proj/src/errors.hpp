#pragma once

#include <stdexcept>
#include <string>

namespace msfa {

// Bad or out-of-domain input (maps to MSFA_ERR_DOMAIN in the C API).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Configuration file / key validation failure (maps to MSFA_ERR_CONFIG).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Quadrature or iteration failed to converge (maps to MSFA_ERR_NUMERIC).
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double residual)
        : std::runtime_error(msg), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// File read/write failure (maps to MSFA_ERR_IO).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace msfa
