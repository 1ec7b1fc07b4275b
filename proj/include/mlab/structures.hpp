#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mlab/functor.hpp"

namespace mlab {

// ---------------------------------------------------------------------------
// Generic finite (co)algebras of a FunctorExpr.

struct FinAlgebra {
  FunctorExpr functor = FunctorExpr::id();
  FinSet carrier;
  NameMap alpha;  // total on eval_on_set(functor, carrier)

  void validate() const;
};

struct FinCoalgebra {
  FunctorExpr functor = FunctorExpr::id();
  FinSet carrier;
  NameMap chi;  // total on carrier, values in eval_on_set(functor, carrier)

  void validate() const;
};

// C x D with chi = nabla . (chi_C x chi_D); same functor required.
FinCoalgebra product_coalgebra(const FinCoalgebra& c, const FinCoalgebra& d);

// The singleton coalgebra (I, eta).
FinCoalgebra unit_coalgebra(const FunctorExpr& f);

// Whether the bijection m: C.carrier -> D.carrier is a coalgebra isomorphism.
bool is_coalgebra_iso(const FinCoalgebra& c, const FinCoalgebra& d, const NameMap& m);

// ---------------------------------------------------------------------------
// The id+1 specializations. Elements are carrier indices for speed; names
// live in the carrier FinSet.

// PointedSuccAlgebra: a zero and a total successor endofunction.
struct SuccAlgebra {
  FinSet carrier;
  int zero = 0;
  std::vector<int> succ;

  int size() const { return static_cast<int>(carrier.size()); }
  const std::string& name(int i) const { return carrier.name(i); }

  FinAlgebra to_fin() const;
  static SuccAlgebra from_fin(const FinAlgebra& a);
  void validate() const;
};

// A partial endofunction: step[i] is the predecessor state, or -1 for stop.
struct SuccCoalgebra {
  FinSet carrier;
  std::vector<int> step;

  int size() const { return static_cast<int>(carrier.size()); }
  const std::string& name(int i) const { return carrier.name(i); }

  FinCoalgebra to_fin() const;
  static SuccCoalgebra from_fin(const FinCoalgebra& c);
  void validate() const;
};

// Value in the terminal coalgebra N^infinity.
struct Index {
  bool infinite = false;
  long value = 0;

  static Index inf() { return {true, 0}; }
  static Index fin(long v) { return {false, v}; }
  bool operator==(const Index&) const = default;
  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

Index index_of(const SuccCoalgebra& c, int state);
std::vector<Index> all_indices(const SuccCoalgebra& c);

// <n> = {0..n} with succ(k) = min(k+1, n), zero 0.
SuccAlgebra std_algebra(int n);
// <n>^ = {0..n} with chi(0) = stop, chi(k) = k-1.
SuccCoalgebra std_coalgebra(int n);
// I = a single state of index infinity.
SuccCoalgebra point_coalgebra();
// The empty coalgebra.
SuccCoalgebra empty_coalgebra();

// Product of id+1 coalgebras, states named "(c,d)"; realizes stepwise pairing
// with stop dominating. Agrees with the generic product_coalgebra.
SuccCoalgebra succ_product(const SuccCoalgebra& c, const SuccCoalgebra& d);

// Eventually periodic chain: chain[0..prefix+cycle-1] with
// chain[prefix + k] repeating with period `cycle`.
struct Lasso {
  std::vector<int> chain;
  int prefix = 0;
  int cycle = 0;
  // position of n in the chain
  int at(long n) const {
    if (n < prefix) return chain[n];
    return chain[prefix + (n - prefix) % cycle];
  }
};

// The sequence 0_A, 1_A, 2_A, ... as a lasso; total length <= |A| + 1.
Lasso canonical_from_initial(const SuccAlgebra& a);

// True iff every carrier element is reachable from zero under succ.
bool is_N_generated(const SuccAlgebra& a);

// All chi-closed subsets with inherited structure, as a poset listing in
// canonical order (by size, then by membership mask).
struct SubcoalgebraListing {
  std::vector<std::vector<int>> subsets;
  std::vector<SuccCoalgebra> coalgebras;
};
SubcoalgebraListing subcoalgebras(const SuccCoalgebra& c, int bound = 8);

// All partitions of the carrier for which succ descends, with the induced
// structure. Blocks are named "{a,b,...}".
struct QuotientListing {
  std::vector<std::vector<int>> block_of;  // block index per element
  std::vector<SuccAlgebra> algebras;
};
QuotientListing quotient_algebras(const SuccAlgebra& a, int bound = 6);

// ---------------------------------------------------------------------------
// Lazy algebras: zero and successor given as computed operations over
// string-keyed elements, with saturation (lasso) detection.

struct LazyAlgebra {
  std::function<std::string()> zero;
  std::function<std::string(const std::string&)> succ;
  std::string description;
};

struct SaturationResult {
  bool saturated = false;
  int prefix = 0;
  int cycle = 0;
  std::vector<std::string> chain;  // prefix + cycle elements when saturated,
                                   // else the first `bound` elements
};

SaturationResult lazy_saturation(const LazyAlgebra& l, int bound);

// The natural numbers as a lazy algebra (never saturates).
LazyAlgebra nat_lazy();

// Lazy view of a finite SuccAlgebra (elements are carrier names).
LazyAlgebra lazy_of(const SuccAlgebra& a);

// Names for subcoalgebras of N^infinity: a down-closed set of finite indices
// (none, {0..n}, or all) together with an optional point of index infinity.
struct SubterminalName {
  enum class Kind { Empty, Bracket, NMinus, IPoint, NInfinity };
  Kind kind = Kind::Empty;
  int n = 0;             // for Bracket
  bool with_point = false;  // Bracket only: also contains the infinity point

  static SubterminalName empty() { return {Kind::Empty, 0, false}; }
  static SubterminalName bracket(int n) { return {Kind::Bracket, n, false}; }
  static SubterminalName bracket_with_point(int n) {
    return {Kind::Bracket, n, true};
  }
  static SubterminalName nminus() { return {Kind::NMinus, 0, false}; }
  static SubterminalName ipoint() { return {Kind::IPoint, 0, false}; }
  static SubterminalName ninfinity() { return {Kind::NInfinity, 0, false}; }

  bool operator==(const SubterminalName& o) const {
    return kind == o.kind &&
           (kind != Kind::Bracket || (n == o.n && with_point == o.with_point));
  }
  std::string str() const;

  // largest finite index contained: -1 none, -2 all
  long finite_upto() const;
  // contains the infinity point
  bool has_point() const;

  // Subcoalgebra inclusion order (subset order on the named subsets).
  bool embeds_in(const SubterminalName& o) const;
};

}  // namespace mlab
