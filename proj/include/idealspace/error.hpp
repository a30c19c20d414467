#ifndef IDEALSPACE_ERROR_HPP
#define IDEALSPACE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idealspace {

enum class ErrorKind {
  InvalidSize,
  InvalidArity,
  InvalidTable,
  InvalidIdeal,
  InvalidHom,
  ImproperIdeal,
  ZeroInMultiplicativeSet,
  MixedRings,
  CapExceeded,
  HypothesisViolated,
  NoPartitionFound,
  UnknownName,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported as Error; kind() identifies the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Size bounds applied by the enumeration routines. Exceeding one raises
/// CapExceeded; nothing is ever truncated.
struct Limits {
  std::size_t max_ring_size = 64;
  std::size_t max_ideals = 4096;
  std::size_t max_points = 24;
  std::size_t max_closed_sets = 100000;
  /// Bound on |R|*|R'| for hom enumeration.
  std::size_t max_hom_work = 4096;
};

/// Serial reference kernels or their OpenMP counterparts.
enum class Exec { serial, parallel };

}  // namespace idealspace

#endif  // IDEALSPACE_ERROR_HPP
