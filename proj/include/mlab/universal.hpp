#pragma once

#include <set>

#include "mlab/measuring.hpp"

namespace mlab {

// Finite presentation of the universal measuring coalgebra for id+1.
// Nodes are the (M1)-respecting functions A -> B; a measuring by C is
// exactly a node labeling of C sending index-0 states to terminal nodes and
// chi-steps to edges.
struct MeasuringGraph {
  FinSet a_carrier, b_carrier;
  std::vector<NameMap> nodes;       // canonical (sorted) order
  std::vector<bool> terminal;       // f(succ a) = zero_B for all a
  std::set<std::pair<int, int>> edges;  // (f, g): f(succ a) = succ(g(a))

  std::string to_dot() const;
};

MeasuringGraph measuring_graph(const SuccAlgebra& a, const SuccAlgebra& b,
                               long bound = 0);

// All labelings of C into the graph respecting terminality and edges; in
// canonical bijection with enumerate_measurings(C, A, B).
std::vector<std::vector<int>> enumerate_labelings(const MeasuringGraph& g,
                                                  const SuccCoalgebra& c);

// Names the universal measuring coalgebra of (A, B) among the subcoalgebras
// of N^infinity. Requires is_N_generated(A).
SubterminalName classify_universal(const SuccAlgebra& a, const SuccAlgebra& b);

// classify_universal(A, N), computed against the lazy target.
SubterminalName dual_coalgebra_classified(const SuccAlgebra& a);

// The dual algebra C* = [C, N].
LazyAlgebra dual_algebra(const SuccCoalgebra& c);

// The measuring tensor C |> A, as a congruence-closed presentation.
// Terms: z, g(c,a), and successor applications; relations:
//   (c, 0_A) ~ z
//   (c, succ b) ~ z          when index(c) = 0
//   (c, succ b) ~ S((chi c, b))  when index(c) >= 1, for every predecessor b
struct PresentedAlgebra {
  // term table: term i is z (i == 0), a generator, or S(parent)
  std::vector<std::string> term_label;  // display form
  std::vector<int> term_parent;         // -1 for z and generators
  std::vector<int> uf;                  // union-find over terms
  std::vector<int> succ_of;             // class rep -> term whose class is the
                                        // successor, or -1 when free

  int find(int t) const;
  // canonical class representatives in display order
  std::vector<int> class_reps() const;
  std::string class_name(int rep) const;

  // Lazy view: elements are class names; free successors extend the chain
  // symbolically as "S(<name>)".
  LazyAlgebra as_lazy() const;

  // |Alg(C |> A, B)|: assignments of B-elements to classes with the z class
  // at zero_B and succ pointers respected; counts up to `cap` (0: no cap).
  long count_homs_into(const SuccAlgebra& b, long cap = 0) const;
};

PresentedAlgebra measuring_tensor(const SuccCoalgebra& c, const SuccAlgebra& a);

}  // namespace mlab
