#pragma once

#include <stdexcept>
#include <string>

namespace chern4 {

// Root of all domain errors raised by the library. The CLI maps these to
// exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Vector length does not match the lattice it is paired against.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Symmetric form has a nontrivial kernel.
class DegenerateFormError : public Error {
public:
    explicit DegenerateFormError(const std::string& what) : Error(what) {}
};

// Operation requires a definite form but received an indefinite one.
class UnsupportedFormError : public Error {
public:
    explicit UnsupportedFormError(const std::string& what) : Error(what) {}
};

// Brute-force oracle refuses inputs beyond its rank/window caps.
class OracleGuardError : public Error {
public:
    explicit OracleGuardError(const std::string& what) : Error(what) {}
};

// Data that cannot arise from the claimed geometric source, e.g. a rank-4
// Chern datum with odd first Chern class fed to the canonical-class map.
class InconsistencyError : public Error {
public:
    explicit InconsistencyError(const std::string& what) : Error(what) {}
};

// Manifold model is missing or violates a field needed by the operation.
class ModelError : public Error {
public:
    explicit ModelError(const std::string& what) : Error(what) {}
};

// Malformed input file or unparseable manifold description.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace chern4
