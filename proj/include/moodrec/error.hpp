#ifndef MOODREC_ERROR_HPP
#define MOODREC_ERROR_HPP

#include <stdexcept>

namespace moodrec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unusable option / argument values (CLI maps these to usage errors).
struct ConfigError : Error {
  using Error::Error;
};

// Missing or unreadable files, failed transfers.
struct IoError : Error {
  using Error::Error;
};

// Structurally malformed input; message carries file:line context.
struct ParseError : Error {
  using Error::Error;
};

// Well-formed input that violates a domain rule (off-grid rating,
// simplex sum out of tolerance, ...).
struct ValidationError : ParseError {
  using ParseError::ParseError;
};

// A file whose column layout does not match the documented schema.
struct SchemaError : ParseError {
  using ParseError::ParseError;
};

// Operation preconditions not met.
struct DomainError : Error {
  using Error::Error;
};

// Id not present in the structure being queried.
struct LookupError : DomainError {
  using DomainError::DomainError;
};

// Movie has no emotion profile where one is required.
struct NotEmotionAwareError : DomainError {
  using DomainError::DomainError;
};

// Movie has no genre data where it is required.
struct NoGenreError : DomainError {
  using DomainError::DomainError;
};

struct DimensionError : Error {
  using Error::Error;
};

}  // namespace moodrec

#endif  // MOODREC_ERROR_HPP
