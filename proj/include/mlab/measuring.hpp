#pragma once

#include "mlab/structures.hpp"

namespace mlab {

// phi[c][a] = b: one total map A -> B per coalgebra state.
using PhiTable = std::map<std::string, NameMap>;

struct Measuring {
  FinCoalgebra C;
  FinAlgebra A, B;
  PhiTable phi;
};

struct CheckResult {
  bool ok = true;
  std::string witness;  // "(c, u)" for the first failing pair
};

// Checks the measuring condition. Dispatches to the id+1 fast path when the
// shared functor is id+1, else to the generic diagram check. Both iterate
// states and F(A)-elements in canonical order, so verdicts and witnesses
// coincide.
CheckResult is_measuring(const Measuring& m);
CheckResult is_measuring_generic(const Measuring& m);
CheckResult is_measuring_idsucc(const Measuring& m);

// Zero-indexed: outcome is `partial_at`-partial when f_0..f_{partial_at}
// exist but the next step is ill-defined.
struct PartialInductionOutcome {
  bool total = false;
  std::vector<NameMap> steps;  // f_0 .. f_last, each total on A
  int partial_at = -1;
  std::string witness;  // conflicting element and its two required images
  NameMap diagonal;     // the limit homomorphism when total
};

// Inductive approximation of a homomorphism A -> B. Requires is_N_generated(A).
PartialInductionOutcome partial_induction(const SuccAlgebra& a,
                                          const SuccAlgebra& b);

// Same construction against a lazily presented target. Stabilization of the
// step sequence certifies totality; `bound` caps the number of steps.
PartialInductionOutcome partial_induction_lazy(const SuccAlgebra& a,
                                               const LazyAlgebra& b, int bound);

// Default per-state enumeration budget: MLAB_ENUM_BOUND or 10^6.
long enum_bound_default();

struct EnumOptions {
  long bound = 0;      // 0: use enum_bound_default()
  long max_count = 0;  // 0: unlimited; otherwise stop after this many
};

struct EnumResult {
  std::vector<PhiTable> items;  // canonically ordered
  bool truncated = false;       // max_count reached before exhaustion
};

// All measurings C -> (A -> B) for id+1, by constraint propagation over
// states in increasing index order with backtracking on the cyclic part.
EnumResult enumerate_measurings(const SuccCoalgebra& c, const SuccAlgebra& a,
                                const SuccAlgebra& b, EnumOptions opts = {});

// (g o f)_{(d,c)} = g_d o f_c on the product coalgebra D x C.
Measuring compose_measurings(const Measuring& g, const Measuring& f);

// The identity measuring at the unit coalgebra.
Measuring identity_measuring(const FinAlgebra& a);

// Convolution algebra [C, B] on carrier B^C.
FinAlgebra convolution_algebra(const FinCoalgebra& c, const FinAlgebra& b,
                               long bound = 0);
// Id+1 fast path; agrees with the generic composite.
SuccAlgebra convolution_succ(const SuccCoalgebra& c, const SuccAlgebra& b,
                             long bound = 0);
// [C, N] with elements "[v0,...,vk]" listing values in carrier order.
LazyAlgebra convolution_lazy(const SuccCoalgebra& c);

// All algebra homomorphisms A -> B in canonical order.
std::vector<NameMap> enumerate_alg_homs(const FinAlgebra& a,
                                        const FinAlgebra& b, long bound = 0);

CheckResult check_alg_hom(const FinAlgebra& a, const FinAlgebra& b,
                          const NameMap& h);

// Splits "[v0,v1,...]" produced by func_name back into components. Values
// must not contain commas or brackets; only [C,N] tuples qualify.
std::vector<std::string> split_func(const std::string& s);

}  // namespace mlab
