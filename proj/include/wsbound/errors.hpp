#ifndef WSBOUND_ERRORS_HPP
#define WSBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wsbound {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// semigroup
struct EmptyGenerators : Error {
  using Error::Error;
};
struct NonCoprimeGenerators : Error {
  using Error::Error;
};
struct BaseNotInSemigroup : Error {
  using Error::Error;
};
struct Overflow : Error {
  using Error::Error;
};

// field_model
struct ParseError : Error {
  using Error::Error;
};
struct ValidationFailure : Error {
  using Error::Error;
};
struct UnknownPlace : Error {
  using Error::Error;
};
struct GapCountMismatch : Error {
  using Error::Error;
};
struct UnboundedRegion : Error {
  using Error::Error;
};
struct CapExceeded : Error {
  using Error::Error;
};

// bound engines
struct InvalidPath : Error {
  using Error::Error;
};
struct HypothesisUnverified : Error {
  using Error::Error;
};

// oracle
struct CapTooSmall : Error {
  using Error::Error;
};
struct WindowTooLarge : Error {
  using Error::Error;
};

// certificates
struct CertificateMismatch : Error {
  CertificateMismatch(const std::string& what, int edge) : Error(what), edge_index(edge) {}
  explicit CertificateMismatch(const std::string& what) : Error(what), edge_index(-1) {}
  int edge_index;
};

}  // namespace wsbound

#endif  // WSBOUND_ERRORS_HPP
