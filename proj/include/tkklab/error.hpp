#pragma once

#include <stdexcept>
#include <string>

namespace tkk {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two operands live over different alphabets.
struct AlphabetMismatch : Error {
  using Error::Error;
};

/// An operation requires a TKK-shaped alphabet (weight-0 singlets plus
/// (e, h, f) triples) and got something else.
struct UnsupportedAlphabet : Error {
  using Error::Error;
};

/// A degree- or weight-homogeneous input was expected.
struct Inhomogeneous : Error {
  using Error::Error;
};

/// A character does not come from a completely reducible module.
struct NotCompletelyReducible : Error {
  using Error::Error;
};

/// Query beyond the certified degree of a Groebner basis.
struct UncertifiedDegree : Error {
  using Error::Error;
};

/// Requested order is not defined for the given monomial kind.
struct UnsupportedOrder : Error {
  using Error::Error;
};

/// Input exceeds a documented resource bound.
struct ResourceLimit : Error {
  using Error::Error;
};

/// An internal consistency check failed (ill-defined quotient action,
/// broken antisymmetry, cross-algorithm mismatch).
struct IntegrityError : Error {
  using Error::Error;
};

/// Malformed presentation or algebra file.
struct SchemaError : Error {
  using Error::Error;
};

}  // namespace tkk
