#pragma once

#include <stdexcept>
#include <string>

namespace mikit {

/// Base class for all errors thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exponent vector's length does not match the ring it is used in.
struct dimension_error : error {
  using error::error;
};

/// Two values from different rings were combined.
struct ring_mismatch_error : error {
  using error::error;
};

/// Variable name sets were required to be disjoint but are not.
struct disjointness_error : error {
  using error::error;
};

/// An invariant computation was asked for the unit ideal.
struct unit_ideal_error : error {
  using error::error;
};

/// A configured computational bound was exceeded.
struct limit_error : error {
  using error::error;
};

/// Input text could not be parsed; carries a 1-based position.
struct parse_error : error {
  int line;
  int column;
  parse_error(const std::string& msg, int line_, int column_)
      : error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace mikit
