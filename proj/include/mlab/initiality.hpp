#pragma once

#include "mlab/universal.hpp"

namespace mlab {

// All id+1 algebras on {e0..e{n-1}}, n <= max_size, up to isomorphism.
// Canonical form: zero at e0, succ table minimal over permutations fixing e0.
std::vector<SuccAlgebra> all_algebras_upto_iso(int max_size);

// Family-relative verdict: the definition quantifies over all algebras, so a
// bounded check can confirm only against the supplied family.
struct CInitialReport {
  std::vector<long> counts;  // measuring count per family member, -1 skipped
  enum class Verdict { OnFamily, Refuted, Inconclusive } verdict =
      Verdict::Inconclusive;
  int witness = -1;  // refuting family index
};

CInitialReport is_C_initial_bounded(const SuccAlgebra& a,
                                    const SuccCoalgebra& c,
                                    const std::vector<SuccAlgebra>& family);

struct TerminalSearchResult {
  bool found = false;
  SuccAlgebra algebra;            // meaningful when found
  std::vector<int> candidates;    // indices into all_algebras_upto_iso(bound)
  std::string note;
};

// Searches all algebras up to isomorphism within the size bound for the
// terminal one among those C-initial on that same family.
TerminalSearchResult terminal_C_initial_bounded(const SuccCoalgebra& c,
                                                int size_bound = 4);

// The unique homomorphism A -> C* = [C, N], presented on A's elements.
// Requires every element of A to be zero or a successor; elements not
// reachable from zero map to the saturated top of [C, N].
NameMap unique_map_to_dual(const SuccAlgebra& a, const SuccCoalgebra& c);

}  // namespace mlab
