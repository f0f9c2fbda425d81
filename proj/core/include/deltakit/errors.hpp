#pragma once

#include <stdexcept>
#include <string>

namespace deltakit {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Interpolation nodes collide.
class DuplicateNode : public Error {
public:
    using Error::Error;
};

/// Integration bounds are reversed.
class InvalidInterval : public Error {
public:
    using Error::Error;
};

/// Two classes live on different lattices, or matrix dimensions disagree.
class LatticeMismatch : public Error {
public:
    using Error::Error;
};

/// A derived-class or basis name is not registered.
class UnknownClass : public Error {
public:
    using Error::Error;
};

/// The divisor lies outside the pseudo-effective cone, or the supplied
/// curve list cannot support a valid negative part.
class NotPseudoEffective : public Error {
public:
    using Error::Error;
};

/// A reconstructed function fails its verification sample.
class DegreeCapExceeded : public Error {
public:
    using Error::Error;
};

/// A sweep ran past every wall without the volume vanishing.
class NoThreshold : public Error {
public:
    using Error::Error;
};

/// A wall or threshold is not a rational number.
class NotRationalWall : public Error {
public:
    using Error::Error;
};

/// A point-flag scenario supplied no point profiles.
class IncompleteProfiles : public Error {
public:
    using Error::Error;
};

/// Scenario file could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Scenario data violates a structural invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace deltakit
