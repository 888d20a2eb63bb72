#pragma once

#include <cstddef>

namespace hgr {

/// Search bounds and parallelism. Defaults cover every audit domain the toolkit ships with.
struct SearchConfig {
  std::size_t subgroup_bound = 400;      // largest group handed to all_subgroups
  std::size_t generator_bound = 3;       // largest generating set for homomorphism searches
  std::size_t closure_cap = 1u << 20;    // element cap for closure()
  std::size_t pair_search_max_degree = 30;
  unsigned threads = 1;
};

}  // namespace hgr
