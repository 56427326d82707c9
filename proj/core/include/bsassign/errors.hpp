#pragma once

#include <stdexcept>
#include <string>

namespace bsassign {

/// The reduced-row-echelon step over S(t*)/(alpha) could not be completed
/// with polynomial entries. Carries a dump of the partially reduced matrix.
class RrefObstruction : public std::runtime_error {
public:
    RrefObstruction(std::string message, std::string dump)
        : std::runtime_error(std::move(message)), dump_(std::move(dump)) {}

    const std::string& dump() const noexcept { return dump_; }

private:
    std::string dump_;
};

/// Pair budget exhausted during a Groebner basis computation.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A covector vanishes on some edge label of the graph it should orient.
class NotPolarizing : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The face delta construction produced a map that fails the edge congruences.
class FaceDeltaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bsassign
