#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "monotrick/formula.hpp"
#include "monotrick/model_space.hpp"
#include "monotrick/search.hpp"

namespace monotrick::detail {

/// Produces the i-th model space of a scan, or nullptr past the end.
using SpaceSource = std::function<std::shared_ptr<const ModelSpace>(std::size_t)>;

struct Hit {
  std::uint64_t index = 0;
  std::shared_ptr<const ModelSpace> space;
  std::size_t domain_map = 0;
  std::uint64_t valuation = 0;
  std::uint64_t equality = 0;
  World world = 0;
  std::vector<Individual> values;
};

struct ScanResult {
  std::optional<Hit> hit;
  bool exhausted = false;  // stopped by the step cap
};

/// Finds the least-indexed candidate with a world and assignment at which f
/// evaluates to `want`. Candidates are numbered across spaces in source
/// order; see ModelSpace for the order within one space.
ScanResult scan_serial(const SpaceSource& source, const Formula& f, bool want,
                       std::uint64_t max_steps);

/// Same result as scan_serial for any worker count.
ScanResult scan_parallel(const SpaceSource& source, const Formula& f, bool want,
                         std::uint64_t max_steps, unsigned workers);

/// Rebuilds the model of a hit together with its world and assignment.
Witness materialize(const Hit& hit, const Formula& f);

}  // namespace monotrick::detail
