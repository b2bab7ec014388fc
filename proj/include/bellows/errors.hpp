#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bellows {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shapes that do not fit the operation (non-square determinant etc).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Inputs that make an operation meaningless (resultant in an absent variable).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A truncated Laurent series ran out of known coefficients.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Symbolic computation exceeded its configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An invariant the mathematics guarantees was observed to fail. Firing
/// means the implementation is wrong, not the input.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed input files.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class OrientabilityError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Numerical construction (Newton closure etc) did not converge.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A face of a face-poset embedding is not flat; carries the face id.
class FacePlanarityError : public Error {
 public:
  FacePlanarityError(const std::string& face, const std::string& detail)
      : Error("face " + face + " is not flat: " + detail), face_(face) {}
  const std::string& face() const { return face_; }

 private:
  std::string face_;
};

}  // namespace bellows
