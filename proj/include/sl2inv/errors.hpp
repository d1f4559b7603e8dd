#pragma once

#include <stdexcept>
#include <string>

namespace sl2inv {

// Three families, matching the CLI exit codes: bad input (2), a failed
// integrality/consistency expectation (3), and a broken internal invariant (4).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept = 0;
};

class InputError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

class ConsistencyError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

class InternalError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

#define SL2INV_ERROR(Name, Base)                                              \
    class Name : public Base {                                                \
    public:                                                                   \
        explicit Name(const std::string& what) : Base(#Name ": " + what) {}   \
    }

SL2INV_ERROR(ParseError, InputError);
SL2INV_ERROR(RangeError, InputError);
SL2INV_ERROR(NotInQ, InputError);
SL2INV_ERROR(DimensionMismatch, InputError);
SL2INV_ERROR(ColorCountMismatch, InputError);
SL2INV_ERROR(NotAlgebraicallySplit, InputError);
SL2INV_ERROR(BadFraming, InputError);
SL2INV_ERROR(InsufficientCoefficients, InputError);
SL2INV_ERROR(IndexError, InputError);
SL2INV_ERROR(LevelTooLow, InputError);
SL2INV_ERROR(OrderTooHigh, InputError);

SL2INV_ERROR(NonExactDivision, ConsistencyError);
SL2INV_ERROR(IntegralityViolation, ConsistencyError);
SL2INV_ERROR(VerificationFailed, ConsistencyError);

SL2INV_ERROR(SingularMatrix, InternalError);
SL2INV_ERROR(NotScalar, InternalError);

#undef SL2INV_ERROR

}  // namespace sl2inv
