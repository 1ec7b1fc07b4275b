#pragma once

#include "mlab/functor.hpp"

namespace mlab {

// One functor's full property suite: lax coherence, naturality of the lax
// structure, and functoriality.
struct LawsSuite {
  std::string functor;
  LawReport lax;
  LawRow naturality;
  LawRow functoriality;

  bool ok() const {
    return lax.all_pass() && naturality.ok() && functoriality.ok();
  }
};

struct LawsRun {
  std::vector<LawsSuite> suites;

  bool all_pass() const {
    for (const auto& s : suites)
      if (!s.ok()) return false;
    return true;
  }
};

// Runs every suite on the standard functor battery: id+1, the bool-and
// constant, 2 x X^Sigma for |Sigma| in {1,2}, and (id+1)^2. max_size <= 3;
// corrupt_nabla injects a fault as a negative control.
LawsRun run_laws(std::size_t max_size = 2, bool corrupt_nabla = false);

}  // namespace mlab
