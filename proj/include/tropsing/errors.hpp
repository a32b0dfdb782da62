#pragma once

#include <stdexcept>
#include <string>

namespace tropsing {

// Error taxonomy shared by every engine and by the CLI exit-code mapping.
//
// ValidationError   -> malformed or out-of-contract input (CLI exit 2)
// InconsistencyError-> the computed mathematics contradicts an invariant the
//                      toolkit is supposed to verify; never suppressed
//                      (CLI exit 3)

class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class InconsistencyError : public std::runtime_error {
public:
    InconsistencyError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define TROPSING_VALIDATION_ERROR(NAME)                                  \
    class NAME : public ValidationError {                                \
    public:                                                              \
        explicit NAME(const std::string& what)                           \
            : ValidationError(#NAME, what) {}                            \
    }

#define TROPSING_INCONSISTENCY_ERROR(NAME)                               \
    class NAME : public InconsistencyError {                             \
    public:                                                              \
        explicit NAME(const std::string& what)                           \
            : InconsistencyError(#NAME, what) {}                         \
    }

TROPSING_VALIDATION_ERROR(SchemaError);
TROPSING_VALIDATION_ERROR(DuplicatePoint);
TROPSING_VALIDATION_ERROR(DimensionUnsupported);
TROPSING_VALIDATION_ERROR(NotFullDimensional);
TROPSING_VALIDATION_ERROR(NotCoplanar);
TROPSING_VALIDATION_ERROR(NotASummand);
TROPSING_VALIDATION_ERROR(NonStabilizing);
TROPSING_VALIDATION_ERROR(NotInjective);
TROPSING_VALIDATION_ERROR(InvalidSupport);
TROPSING_VALIDATION_ERROR(ExceptionalCase);
TROPSING_VALIDATION_ERROR(AssumptionViolated);
TROPSING_VALIDATION_ERROR(InfiniteIndex);
TROPSING_VALIDATION_ERROR(ZeroEntry);
TROPSING_VALIDATION_ERROR(DivisionFailure);

TROPSING_INCONSISTENCY_ERROR(InconsistencyDetected);
TROPSING_INCONSISTENCY_ERROR(NegativeNodeCount);
TROPSING_INCONSISTENCY_ERROR(ParityViolation);

#undef TROPSING_VALIDATION_ERROR
#undef TROPSING_INCONSISTENCY_ERROR

// Internal invariant check: failures signal a bug in this library (or a
// genuinely inconsistent mathematical convention), never bad user input.
inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InconsistencyDetected("internal invariant failed: " + what);
}

} // namespace tropsing
