#pragma once

#include <stdexcept>

namespace isoptics {

/// Base class of every domain error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// distance() was asked about a point on or outside the model boundary.
class NonProperPoint : public Error {
public:
    using Error::Error;
};

/// A strict angle formula was called outside its configuration
/// (wrong line classes or wrong Gram determinant sign).
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// Tangents were requested from a point interior to the conic.
class NotExternalPoint : public Error {
public:
    using Error::Error;
};

/// The pencil/line-conic quadratic of the generic tangent solver has no
/// real root.
class NoRealTangent : public Error {
public:
    using Error::Error;
};

/// Parameter combination that the classification tables do not cover.
class UnclassifiableParameters : public Error {
public:
    using Error::Error;
};

/// A dual-parameter map would divide by a zero parameter.
class DivisionByZeroParameter : public Error {
public:
    using Error::Error;
};

/// The point-conic matrix is singular at the given parameters.
class SingularConic : public Error {
public:
    using Error::Error;
};

/// An affine quantity was requested for a point at infinity.
class IdealPoint : public Error {
public:
    using Error::Error;
};

/// The isoptic quotient's denominator vanishes at the query point.
class SingularDenominator : public Error {
public:
    using Error::Error;
};

/// Isoptic residual requested where no branch of the compound curve applies.
class InvalidRegion : public Error {
public:
    using Error::Error;
};

/// The tangent pair contains a boundary line, so no generalized angle exists.
class UndefinedAngle : public Error {
public:
    using Error::Error;
};

} // namespace isoptics
