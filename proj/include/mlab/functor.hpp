#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlab/finset.hpp"

namespace mlab {

// Commutative monoid on a finite carrier. Associativity, commutativity and
// unitality are checked exhaustively at construction.
struct Monoid {
  FinSet carrier;
  std::string unit;
  std::map<std::pair<std::string, std::string>, std::string> op;
  std::string name;  // display name, e.g. "bool and"

  Monoid(FinSet carrier_, std::string unit_,
         std::map<std::pair<std::string, std::string>, std::string> op_,
         std::string name_ = "");

  const std::string& apply(const std::string& a, const std::string& b) const {
    return op.at({a, b});
  }
};

Monoid trivial_monoid();             // carrier {*}
Monoid bool_monoid(const std::string& op);  // "and" | "or" | "xor"

// Syntax tree for an accessible lax symmetric monoidal endofunctor on finite
// sets, in the cartesian structure (Set, x, 1).
class FunctorExpr {
 public:
  enum class Kind { Id, Const, Prod, Sum, Comp, Exp };

  static FunctorExpr id();
  static FunctorExpr constant(Monoid m);
  static FunctorExpr prod(FunctorExpr left, FunctorExpr right);
  static FunctorExpr sum(FunctorExpr left, Monoid right);
  static FunctorExpr comp(FunctorExpr outer, FunctorExpr inner);
  static FunctorExpr exp(FinSet base);

  Kind kind() const { return kind_; }
  const Monoid& monoid() const { return *monoid_; }
  const FunctorExpr& left() const { return *left_; }
  const FunctorExpr& right() const { return *right_; }
  const FinSet& base() const { return base_; }

  std::string to_string() const;
  bool operator==(const FunctorExpr& other) const {
    return to_string() == other.to_string();
  }

 private:
  FunctorExpr() = default;
  Kind kind_ = Kind::Id;
  std::shared_ptr<const Monoid> monoid_;
  std::shared_ptr<const FunctorExpr> left_, right_;
  FinSet base_;
};

// X + 1, the running example: Sum(Id, trivial monoid).
const FunctorExpr& idsucc_functor();
// 2 x X^Sigma, the Moore automaton functor: Prod(Const(bool,and), Exp(Sigma)).
FunctorExpr automaton_functor(const FinSet& alphabet);
// (2 x X^Sigma) + 1: the mixed GF functor with G = id+1.
FunctorExpr gf_functor(const FinSet& alphabet);

// Carrier of F(X), canonically named.
FinSet eval_on_set(const FunctorExpr& f, const FinSet& x);

// Functorial action on f: X -> Y, as a map F(X) -> F(Y).
NameMap eval_on_map(const FunctorExpr& f, const FinSet& x, const NameMap& fn);

using PairMap = std::map<std::pair<std::string, std::string>, std::string>;

// Lax structure map nabla_{X,Y}: F(X) x F(Y) -> F(X x Y).
PairMap nabla(const FunctorExpr& f, const FinSet& x, const FinSet& y);

// Lax unit eta: element of F(1), 1 = {*}.
std::string eta(const FunctorExpr& f);

struct LawRow {
  std::string law;
  long instances = 0;
  std::vector<std::string> failures;  // witness descriptions
  bool ok() const { return failures.empty(); }
};

struct LawReport {
  std::vector<LawRow> rows;
  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.ok()) return false;
    return true;
  }
};

// Optional fault injection for negative controls in `mlab laws`: swaps the
// images of the two lexicographically first entries of every nabla table.
struct NablaCorruptor {
  bool enabled = false;
};

// Exhaustively verifies the associativity, unitality and commutativity
// diagrams of the lax structure on all canonical sets of size <= max_size.
LawReport check_lax_axioms(const FunctorExpr& f, std::size_t max_size,
                           const NablaCorruptor& corrupt = {});

// Naturality of nabla in both arguments, over all maps between canonical
// sets of size <= max_size.
LawRow check_nabla_natural(const FunctorExpr& f, std::size_t max_size);

// Identity and composition functor laws over all maps between canonical sets
// of size <= max_size.
LawRow check_functor_laws(const FunctorExpr& f, std::size_t max_size);

// S-expression input format, e.g. "(sum id (const bool and))",
// "(prod (const bool and) (exp a b))", "idsucc", "(gf a b)".
FunctorExpr parse_functor(const std::string& text);

}  // namespace mlab
