#ifndef INVSUB_COMMON_HPP
#define INVSUB_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace invsub {

/// Resource limits for exhaustive scans. Elementwise operations refuse to
/// touch fields larger than `max_field_size`; subspace enumeration refuses
/// fields whose total subspace count exceeds `max_subspaces`.
struct Budget {
    std::uint64_t max_field_size = 1024;
    std::uint64_t max_subspaces = std::uint64_t{1} << 24;
};

/// Thrown when an operation would exceed the configured Budget.
class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an exhaustive check contradicts the classification theorem.
/// This is never expected to fire; it exists so a falsifying instance aborts
/// loudly with a full description instead of being folded into a data state.
class TheoremViolation : public std::logic_error {
  public:
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace invsub

#endif
