#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "corrkernel/errors.hpp"

namespace corrkernel {

// Ordered set of distinct symbol labels. The order is part of the identity:
// it fixes matrix layouts, serialization, and tie-breaking.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
      throw InvalidInputError("alphabet must not be empty");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      for (std::size_t j = i + 1; j < symbols_.size(); ++j) {
        if (symbols_[i] == symbols_[j]) {
          throw InvalidInputError("duplicate alphabet label: " + symbols_[i]);
        }
      }
    }
  }

  std::size_t size() const { return symbols_.size(); }
  const std::string& label(std::size_t i) const { return symbols_.at(i); }
  const std::vector<std::string>& labels() const { return symbols_; }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i] == label) return i;
    }
    return std::nullopt;
  }

  bool operator==(const Alphabet& other) const = default;

 private:
  std::vector<std::string> symbols_;
};

}  // namespace corrkernel
