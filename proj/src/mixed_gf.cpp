#include "mlab/mixed_gf.hpp"

#include <cmath>

namespace mlab {

void MooreCoalgebra::validate() const {
  for (const auto& q : states.names()) {
    auto it = accept.find(q);
    if (it == accept.end())
      throw validation_error("accept is not defined at state " + q);
    if (it->second != "tt" && it->second != "ff")
      throw validation_error("accept(" + q + ") must be tt or ff");
    for (const auto& s : alphabet.names()) {
      auto jt = delta.find({q, s});
      if (jt == delta.end())
        throw validation_error("delta is not defined at (" + q + "," + s + ")");
      if (!states.contains(jt->second))
        throw validation_error("delta(" + q + "," + s + ") = " + jt->second +
                               " is not a state");
    }
  }
}

FinCoalgebra MooreCoalgebra::to_fin() const {
  validate();
  FinCoalgebra c;
  c.functor = automaton_functor(alphabet);
  c.carrier = states;
  for (const auto& q : states.names()) {
    std::vector<std::string> row;
    for (const auto& s : alphabet.names()) row.push_back(delta.at({q, s}));
    c.chi[q] = pair_name(accept.at(q), func_name(row));
  }
  return c;
}

void validate_gf(const GFAlgebra& a, const FinSet& alphabet) {
  if (!(a.functor == gf_functor(alphabet)))
    throw precondition_failed("algebra structure is not over (gf " +
                              FunctorExpr::exp(alphabet).to_string() +
                              ")-shaped input");
  a.validate();
}

GFAlgebra gf_convolution(const MooreCoalgebra& c, const GFAlgebra& a,
                         long bound) {
  c.validate();
  validate_gf(a, c.alphabet);
  if (bound <= 0) bound = enum_bound_default();
  double est = std::pow(static_cast<double>(a.carrier.size()),
                        static_cast<double>(c.states.size()));
  if (est > static_cast<double>(bound))
    throw bound_exceeded("convolution refused: " +
                         std::to_string(a.carrier.size()) + "^" +
                         std::to_string(c.states.size()) + " ~ " +
                         std::to_string(est) + " exceeds bound " +
                         std::to_string(bound));

  // Carrier A^C, tuples listing values in state order.
  std::map<std::string, std::vector<std::string>> table;
  std::vector<std::string> names;
  for (const auto& tup : all_tuples(a.carrier, c.states.size())) {
    std::string n = func_name(tup);
    table[n] = tup;
    names.push_back(n);
  }
  GFAlgebra r;
  r.functor = a.functor;
  r.carrier = FinSet(names);

  FunctorExpr f = automaton_functor(c.alphabet);
  FinCoalgebra cf = c.to_fin();
  FinSet fcc = eval_on_set(f, r.carrier);
  PairMap nab = nabla(f, r.carrier, c.states);
  NameMap ev;
  for (const auto& n : r.carrier.names())
    for (int q = 0; q < c.size(); ++q)
      ev[pair_name(n, c.states.name(q))] = table.at(n)[q];
  NameMap fev = eval_on_map(f, product_set(r.carrier, c.states), ev);

  {
    std::vector<std::string> vals(c.size(), a.alpha.at("inr(*)"));
    r.alpha["inr(*)"] = func_name(vals);
  }
  for (const auto& w : fcc.names()) {
    std::vector<std::string> vals(c.size());
    for (int q = 0; q < c.size(); ++q)
      vals[q] = a.alpha.at(
          "inl(" + fev.at(nab.at({w, cf.chi.at(c.states.name(q))})) + ")");
    r.alpha["inl(" + w + ")"] = func_name(vals);
  }
  return r;
}

long gf_measuring_count(const MooreCoalgebra& c, const GFAlgebra& a,
                        const GFAlgebra& b, long bound) {
  validate_gf(a, c.alphabet);
  GFAlgebra conv = gf_convolution(c, b, bound);
  return static_cast<long>(enumerate_alg_homs(a, conv, bound).size());
}

}  // namespace mlab
