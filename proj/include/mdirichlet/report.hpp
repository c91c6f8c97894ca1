#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mdirichlet {

/// One named seminorm value with a certified error bound; the unit of all
/// verification output. For complex-ball quantities `cells_used` lists the
/// bigraded cells (p,q); real-ball quantities list degrees as (p,-1).
struct SeminormReport {
  std::string name;
  double value = 0.0;
  double error_bound = 0.0;
  std::vector<std::pair<int, int>> cells_used;
  std::string notes;
};

}  // namespace mdirichlet
