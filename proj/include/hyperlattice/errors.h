#ifndef HYPERLATTICE_ERRORS_H
#define HYPERLATTICE_ERRORS_H

#include <stdexcept>
#include <string>

namespace hyperlattice {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HYPERLATTICE_DEFINE_ERROR(Name)          \
  class Name : public Error {                    \
   public:                                       \
    using Error::Error;                          \
  }

// hyper-core
HYPERLATTICE_DEFINE_ERROR(InfiniteOverflow);
HYPERLATTICE_DEFINE_ERROR(NotFinite);
// lattice
HYPERLATTICE_DEFINE_ERROR(ScaleOverflow);
HYPERLATTICE_DEFINE_ERROR(OutOfWindow);
// operator algebra
HYPERLATTICE_DEFINE_ERROR(StatisticsMismatch);
HYPERLATTICE_DEFINE_ERROR(DimensionError);
HYPERLATTICE_DEFINE_ERROR(TooLarge);
// symmetries
HYPERLATTICE_DEFINE_ERROR(BadDimension);
HYPERLATTICE_DEFINE_ERROR(NoExactForm);
HYPERLATTICE_DEFINE_ERROR(GridMiss);
// driver
HYPERLATTICE_DEFINE_ERROR(UnknownSuite);
// dsl
HYPERLATTICE_DEFINE_ERROR(EvalError);

#undef HYPERLATTICE_DEFINE_ERROR

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace hyperlattice

#endif  // HYPERLATTICE_ERRORS_H
