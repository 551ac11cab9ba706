#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gecliff {

// Base class for every error the library raises. `kind()` is a stable
// identifier used by the CLI when it serializes failures.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m) : Error("DimensionMismatch", m) {}
};

struct ContextMismatch : Error {
  explicit ContextMismatch(const std::string& m) : Error("ContextMismatch", m) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& m) : Error("InvalidArgument", m) {}
};

struct NotInvertible : Error {
  explicit NotInvertible(const std::string& m) : Error("NotInvertible", m) {}
};

struct NotInvertibleInGamma : Error {
  explicit NotInvertibleInGamma(const std::string& m) : Error("NotInvertibleInGamma", m) {}
};

struct NonIntegral : Error {
  explicit NonIntegral(const std::string& m) : Error("NonIntegral", m) {}
};

struct NotAMember : Error {
  explicit NotAMember(const std::string& m) : Error("NotAMember", m) {}
};

// Raised when the Euclidean reduction fails to shrink the upper-right entry.
// Unreachable for supported inputs; seeing it means a bug.
struct ReductionStalled : Error {
  explicit ReductionStalled(const std::string& m) : Error("ReductionStalled", m) {}
};

struct PartitionNotDisjoint : Error {
  explicit PartitionNotDisjoint(const std::string& m) : Error("PartitionNotDisjoint", m) {}
};

struct RelatorCrossesFactors : Error {
  RelatorCrossesFactors(const std::string& m, std::string relator)
      : Error("RelatorCrossesFactors", m), relator_(std::move(relator)) {}
  const std::string& relator() const noexcept { return relator_; }

 private:
  std::string relator_;
};

struct MissingModel : Error {
  explicit MissingModel(const std::string& m) : Error("MissingModel", m) {}
};

struct ParseError : Error {
  ParseError(const std::string& m, std::size_t offset)
      : Error("ParseError", m + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gecliff
