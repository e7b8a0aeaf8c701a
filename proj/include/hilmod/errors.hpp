#pragma once

#include <stdexcept>
#include <string>

namespace hilmod {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (polynomial grammar, ideal files, JSON inputs).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition of an operation does not hold for the input.
class PreconditionError : public Error {
public:
    enum class Kind {
        dimension_mismatch,
        index_out_of_range,
        non_homogeneous,
        non_minimal,
        not_zero_dimensional,
        invalid_parameters,
        out_of_span,
        inconsistent_samples,
        degenerate_system,
    };

    PreconditionError(Kind kind, const std::string& what)
        : Error(std::string(kind_name(kind)) + ": " + what), kind_(kind)
    {
    }

    Kind kind() const noexcept { return kind_; }

    static const char* kind_name(Kind k) noexcept
    {
        switch (k) {
        case Kind::dimension_mismatch: return "dimension mismatch";
        case Kind::index_out_of_range: return "index out of range";
        case Kind::non_homogeneous: return "non-homogeneous ideal";
        case Kind::non_minimal: return "non-minimal generators";
        case Kind::not_zero_dimensional: return "not zero-dimensional";
        case Kind::invalid_parameters: return "invalid parameters";
        case Kind::out_of_span: return "out of span";
        case Kind::inconsistent_samples: return "inconsistent samples";
        case Kind::degenerate_system: return "degenerate system";
        }
        return "precondition";
    }

private:
    Kind kind_;
};

/// A certificate the library checks on its own output failed. This indicates a
/// bug, not bad input.
class InconsistencyError : public Error {
public:
    explicit InconsistencyError(const std::string& what)
        : Error("internal inconsistency: " + what)
    {
    }
};

} // namespace hilmod
