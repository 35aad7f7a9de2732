#pragma once

#include <cstddef>
#include <vector>

#include "simdel/instance.hpp"

namespace simdel {

/// Result of the forced-deletion pass for eliminating instances.
struct PreprocessOutcome {
  enum class Status { Reduced, NoInstance };

  Status status = Status::Reduced;
  /// G minus forced, C minus forced, k minus |forced|. Copy of the input on NoInstance.
  ProblemInstance instance;
  std::vector<Edge> forced;  // in the order they were forced
  std::size_t budget_spent = 0;

  bool no_instance() const noexcept { return status == Status::NoInstance; }
};

/// For every wedge x - u - y over a target pair {x, y}: a wedge with no
/// candidate leg makes the instance a no-instance, a wedge with exactly one
/// candidate leg forces that leg's deletion. Iterated to a fixed point.
///
/// On Reduced, every remaining wedge has both legs in C. Targets are scanned
/// in input order and common neighbors in ascending id. Throws InputError for
/// non-eliminating instances: with t > 0 an undeletable wedge is not fatal.
PreprocessOutcome preprocess_es(const ProblemInstance& inst);

}  // namespace simdel
