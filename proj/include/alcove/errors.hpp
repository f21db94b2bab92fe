#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

/// Unsupported (family, rank) pair.
class InvalidType : public std::runtime_error {
  public:
    explicit InvalidType(const std::string& what) : std::runtime_error(what) {}
};

/// Vectors given in incompatible coordinate spaces.
class DimensionMismatch : public std::runtime_error {
  public:
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Weyl group order exceeds the enumeration budget.
class GroupTooLarge : public std::runtime_error {
  public:
    explicit GroupTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// H^2 does not generate the cohomology ring, so the divisor recursion
/// cannot express every Schubert class.
class NotDivisorGenerated : public std::runtime_error {
  public:
    explicit NotDivisorGenerated(const std::string& what) : std::runtime_error(what) {}
};

/// Linear program has no feasible point.
class Infeasible : public std::runtime_error {
  public:
    explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

/// A marking violates the alcove constraints.
class AlcoveViolation : public std::runtime_error {
  public:
    explicit AlcoveViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix handed to the holonomy oracle drifted off the unitary group.
class NonUnitaryInput : public std::runtime_error {
  public:
    explicit NonUnitaryInput(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration request exceeds the configured budget guard.
class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant; indicates a bug, not bad input.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

#define ALCOVE_ASSERT(cond, msg) \
    do { \
        if (!(cond)) throw ::alcove::InternalError(std::string("assertion failed: ") + (msg)); \
    } while (0)

}  // namespace alcove
