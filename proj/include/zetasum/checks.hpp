#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zetasum/hankel.hpp"
#include "zetasum/series.hpp"

// Registry of identity suites. Each suite evaluates an identity over a fixed
// grid and reports the largest deviation against a pinned tolerance.

namespace zetasum {

struct CheckConfig {
  ContourSpec contour;
  SeriesConfig series;
};

struct CheckReport {
  std::string id;
  std::size_t grid_size = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double wall_seconds = 0.0;
  std::string worst_point;  // grid point with the largest deviation
  std::string failure;      // first exception raised, if any
};

/// Canonical suite ids in registry order.
std::vector<std::string> check_ids();

/// Resolves an id or alias to its canonical id; throws DomainError if unknown.
std::string canonical_check_id(std::string_view id);

/// Expands "all" and resolves aliases; throws DomainError on unknown ids
/// before anything is computed.
std::vector<std::string> resolve_check_ids(const std::vector<std::string>& ids);

CheckReport run_check(std::string_view id, const CheckConfig& cfg = {});

}  // namespace zetasum
