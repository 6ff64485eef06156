#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tau {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
public:
    NotDivisible() : Error("polynomial is not divisible by the given divisor") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by the zero polynomial") {}
};

class NonSquare : public Error {
public:
    NonSquare() : Error("determinant of a non-square matrix") {}
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

class NodeOutside : public Error {
public:
    NodeOutside(int row, int col)
        : Error("node (" + std::to_string(row) + "," + std::to_string(col) +
                ") is not in the diagram") {}
};

class IndexOutOfBand : public Error {
public:
    explicit IndexOutOfBand(int j) : Error("beta index " + std::to_string(j) + " outside the band") {}
};

/// Raised when N_w does not divide the cleared determinant. Always a bug, never user error.
class NormalizationMismatch : public Error {
public:
    explicit NormalizationMismatch(const std::string& where)
        : Error("normalization mismatch: " + where) {}
};

/// A cocycle step whose generator does not add a node (m_i != 1). Position is 1-based,
/// counted in acting order (the rightmost letter is step 1).
class InadmissibleStep : public Error {
public:
    explicit InadmissibleStep(std::size_t position)
        : Error("inadmissible at step " + std::to_string(position)), position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class WindowTooSmall : public Error {
public:
    explicit WindowTooSmall(const std::string& what) : Error("window too small: " + what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace tau
