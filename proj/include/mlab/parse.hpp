#pragma once

#include "mlab/mixed_gf.hpp"

namespace mlab {

// Positioned diagnostic for the text formats. Codes: PARSE_ERROR,
// UNKNOWN_ELEMENT, NON_TOTAL_MAP, DUPLICATE_NAME.
struct Diagnostic {
  std::string code;
  int line = 1;
  int col = 1;
  std::string message;

  std::string str() const;
};

// Parse failure; what() is diag.str().
struct parse_diagnostic : validation_error {
  Diagnostic diag;
  explicit parse_diagnostic(Diagnostic d);
};

// One structure per file:
//   algebra idsucc { elements a b c; zero a; succ a->b b->c c->c; }
//   coalgebra idsucc { elements x y; step x->stop y->x; }
//   algebra (gf a b) { elements x; alpha inr(*)->x ...; }
//   coalgebra (prod (const bool and) (exp a)) { elements q; chi q->(tt,[q]); }
//   automaton { alphabet a b; states q0 q1; accept q0; delta q0,a->q1 ...; }
struct ParsedStructure {
  enum class Kind {
    IdsuccAlgebra,
    IdsuccCoalgebra,
    GenericAlgebra,
    GenericCoalgebra,
    Automaton
  };
  Kind kind = Kind::IdsuccAlgebra;
  SuccAlgebra alg;            // IdsuccAlgebra
  SuccCoalgebra coalg;        // IdsuccCoalgebra
  FinAlgebra fin_alg;         // GenericAlgebra
  FinCoalgebra fin_coalg;     // GenericCoalgebra
  MooreCoalgebra automaton;   // Automaton
};

ParsedStructure parse_structure(const std::string& text);

// Canonical printer; print . parse . print == print.
std::string print_structure(const ParsedStructure& s);

}  // namespace mlab
