#pragma once

#include "mlab/measuring.hpp"

namespace mlab {

// Moore automaton: a coalgebra of F(X) = 2 x X^Sigma.
struct MooreCoalgebra {
  FinSet alphabet;
  FinSet states;
  NameMap accept;  // state -> "tt" | "ff"
  PairMap delta;   // (state, letter) -> state, total

  int size() const { return static_cast<int>(states.size()); }
  FinCoalgebra to_fin() const;  // chi(q) = (accept(q), s |-> delta(q, s))
  void validate() const;
};

// An algebra of GF with G = id+1: structure (2 x X^Sigma) + 1 -> X.
using GFAlgebra = FinAlgebra;

// Checks that a is a GF-algebra over the given alphabet.
void validate_gf(const GFAlgebra& a, const FinSet& alphabet);

// The GF-algebra on [C, A] = A^C: the point is routed through G, and a pair
// (b, g) is paired statewise with C's structure via the lax structure of F,
// evaluated, and fed to A's structure.
GFAlgebra gf_convolution(const MooreCoalgebra& c, const GFAlgebra& a,
                         long bound = 0);

// |Alg_GF(A, [C, B])|, by exhaustive homomorphism enumeration.
long gf_measuring_count(const MooreCoalgebra& c, const GFAlgebra& a,
                        const GFAlgebra& b, long bound = 0);

}  // namespace mlab
