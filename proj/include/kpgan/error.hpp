#pragma once

#include <stdexcept>
#include <string>

namespace kpgan {

// Error taxonomy. The CLI maps these onto stable exit codes:
//   ParseError/SchemaError -> 2, missing checkpoint dependency -> 3,
//   CheckpointFormatError -> 4, AlignmentError -> 5.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct NumericError : Error {
  using Error::Error;
};

struct InputError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Dataset line failed to parse; line numbers are 1-based.
struct ParseError : Error {
  ParseError(long line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_number(line) {}
  long line_number;
};

// Dataset record is valid JSON but misses or mistypes a required field.
struct SchemaError : Error {
  SchemaError(long line, const std::string& field)
      : Error("line " + std::to_string(line) + ": missing or non-string field \"" + field + "\""),
        line_number(line),
        field_name(field) {}
  long line_number;
  std::string field_name;
};

// Checkpoint bytes are not loadable (bad magic, unsupported version, corrupt layout).
struct CheckpointFormatError : Error {
  using Error::Error;
};

// Prediction/gold files do not line up.
struct AlignmentError : Error {
  using Error::Error;
};

}  // namespace kpgan
