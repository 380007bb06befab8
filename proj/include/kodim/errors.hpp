#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kodim {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A geometry name failed to resolve against the catalog. Carries the
// offending name plus close-match suggestions for diagnostics.
class NotFoundError : public Error {
public:
    NotFoundError(std::string name, std::vector<std::string> suggestions);

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& suggestions() const noexcept { return suggestions_; }

private:
    static std::string format(const std::string& name,
                              const std::vector<std::string>& suggestions);

    std::string name_;
    std::vector<std::string> suggestions_;
};

// Two operands have incompatible dimensions (domination queries, bundle
// factors, decomposition arithmetic).
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

// The requested operation only makes sense for geometries admitting a
// closed (compact) manifold modeled on them.
class NoCompactRepresentativeError : public Error {
public:
    using Error::Error;
};

// A positivity rule and a vanishing rule both matched the same geometry;
// the rule set is inconsistent on this input.
class InconsistentRulesError : public Error {
public:
    using Error::Error;
};

// Supremum of an empty set of extended kappa values.
class EmptySetError : public Error {
public:
    using Error::Error;
};

// A fibered record carries no decompositions to take a supremum over.
class EmptyDecompositionsError : public Error {
public:
    using Error::Error;
};

// A decomposition index is out of range (or the geometry is not fibered).
class InvalidDecompositionIndexError : public Error {
public:
    using Error::Error;
};

// Malformed user input: bad factor syntax, out-of-range dimension, etc.
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace kodim
