#ifndef MLL_ERRORS_HPP
#define MLL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace mll {

// Base for all domain errors. `code()` is the stable machine-readable
// identifier used by the CLI's JSON error output; `what()` is for humans.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error("syntax", what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

struct BadAddress : Error {
  explicit BadAddress(const std::string& what) : Error("bad_address", what) {}
};

struct NotPerfectMatching : Error {
  explicit NotPerfectMatching(const std::string& what)
      : Error("not_perfect_matching", what) {}
};

struct PolarityMismatch : Error {
  explicit PolarityMismatch(const std::string& what)
      : Error("polarity_mismatch", what) {}
};

struct InterfaceMismatch : Error {
  explicit InterfaceMismatch(const std::string& what)
      : Error("interface_mismatch", what) {}
};

struct CutCycle : Error {
  explicit CutCycle(const std::string& what) : Error("cut_cycle", what) {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& what)
      : Error("shape_mismatch", what) {}
};

struct SizeBoundExceeded : Error {
  explicit SizeBoundExceeded(const std::string& what)
      : Error("size_bound_exceeded", what) {}
};

}  // namespace mll

#endif  // MLL_ERRORS_HPP
