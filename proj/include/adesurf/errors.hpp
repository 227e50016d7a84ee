#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adesurf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ADESURF_DEFINE_ERROR(Name)          \
    class Name : public Error {             \
    public:                                 \
        using Error::Error;                 \
    }

ADESURF_DEFINE_ERROR(DivisionByZero);
ADESURF_DEFINE_ERROR(FieldMismatch);
ADESURF_DEFINE_ERROR(ZeroPolynomial);
ADESURF_DEFINE_ERROR(ReduciblePolynomial);
ADESURF_DEFINE_ERROR(UnknownVariable);
ADESURF_DEFINE_ERROR(ChartCoordinateZero);
ADESURF_DEFINE_ERROR(SingularMatrix);
ADESURF_DEFINE_ERROR(NotHomogeneous);
ADESURF_DEFINE_ERROR(NotZeroDimensional);
ADESURF_DEFINE_ERROR(ShapePositionFailed);
ADESURF_DEFINE_ERROR(BadPrime);
ADESURF_DEFINE_ERROR(CapExceeded);
ADESURF_DEFINE_ERROR(CorankThree);
ADESURF_DEFINE_ERROR(ExponentOverflow);
ADESURF_DEFINE_ERROR(JetTooShort);

#undef ADESURF_DEFINE_ERROR

/// Parse failure; `position` is the byte offset into the input.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace adesurf
