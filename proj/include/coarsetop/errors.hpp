#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coarsetop {

/// Thrown when two provably-equivalent evaluation routes disagree.
/// Every characterisation theorem in the library is wired as a pair of
/// independent evaluations plus this check; a throw means a bug, never
/// a property of the input.
class TheoremViolation : public std::logic_error {
 public:
  explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

/// One violated axiom with a replayable witness.
struct ValidationError {
  std::string axiom;    // e.g. "non-disjoint-union", "BN4", "diagonal"
  std::string witness;  // rendered minimal counterexample
};

/// Result of a validator: either a canonicalized value or the full error list.
template <typename T>
struct Validated {
  std::optional<T> value;
  std::vector<ValidationError> errors;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }

  static Validated success(T v) { return Validated{std::move(v), {}}; }
  static Validated failure(std::vector<ValidationError> errs) {
    return Validated{std::nullopt, std::move(errs)};
  }

  std::string error_text() const {
    std::string out;
    for (const auto& e : errors) {
      if (!out.empty()) out += "; ";
      out += e.axiom + ": " + e.witness;
    }
    return out;
  }
};

}  // namespace coarsetop
