#pragma once

#include <stdexcept>
#include <string>

namespace corrkernel {

// Exception taxonomy used across the library. The CLI maps each type to a
// machine-readable "kind" string, so keep the set small and stable.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct InvalidInputError : Error {
  explicit InvalidInputError(const std::string& msg) : Error("invalid-input", msg) {}
};

struct InvalidStateError : Error {
  explicit InvalidStateError(const std::string& msg) : Error("invalid-state", msg) {}
};

struct AlphabetMismatchError : Error {
  explicit AlphabetMismatchError(const std::string& msg) : Error("alphabet-mismatch", msg) {}
};

struct IllConditionedSubspaceError : Error {
  explicit IllConditionedSubspaceError(const std::string& msg)
      : Error("ill-conditioned-subspace", msg) {}
};

struct NotAKernelError : Error {
  explicit NotAKernelError(const std::string& msg) : Error("not-a-kernel", msg) {}
};

struct EmptyFeatureError : Error {
  explicit EmptyFeatureError(const std::string& msg) : Error("empty-feature", msg) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error("precondition", msg) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error("domain", msg) {}
};

}  // namespace corrkernel
