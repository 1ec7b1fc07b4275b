#include "mlab/laws.hpp"

#include "mlab/errors.hpp"

namespace mlab {

LawsRun run_laws(std::size_t max_size, bool corrupt_nabla) {
  if (max_size > 3)
    throw precondition_failed("law suites are capped at size 3");
  std::vector<FunctorExpr> battery = {
      idsucc_functor(),
      FunctorExpr::constant(bool_monoid("and")),
      automaton_functor(FinSet({"a"})),
      automaton_functor(FinSet({"a", "b"})),
      FunctorExpr::comp(idsucc_functor(), idsucc_functor()),
  };
  NablaCorruptor corrupt{corrupt_nabla};
  LawsRun run;
  for (const auto& f : battery) {
    LawsSuite s;
    s.functor = f.to_string();
    s.lax = check_lax_axioms(f, max_size, corrupt);
    s.naturality = check_nabla_natural(f, max_size);
    s.functoriality = check_functor_laws(f, max_size);
    run.suites.push_back(std::move(s));
  }
  return run;
}

}  // namespace mlab
