#ifndef FILTLEX_ERRORS_H
#define FILTLEX_ERRORS_H

#include <stdexcept>
#include <string>

namespace filtlex {

// Base of everything the library throws on bad input or misuse.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Missing resources, bad flags, impossible sizes.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input files that do not parse.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Source and target files disagree on line count.
class AlignmentError : public FormatError {
 public:
  using FormatError::FormatError;
};

class MalformedPairError : public FormatError {
 public:
  using FormatError::FormatError;
};

// A tagged token without a separator, or a tag the tag table cannot map.
class TaggingError : public FormatError {
 public:
  using FormatError::FormatError;
};

// A caller broke a precondition (crossing loci, unknown provenance, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace filtlex

#endif
