#include "mlab/parse.hpp"

#include <cctype>

namespace mlab {

std::string Diagnostic::str() const {
  return std::to_string(line) + ":" + std::to_string(col) + ": " + code + ": " +
         message;
}

parse_diagnostic::parse_diagnostic(Diagnostic d)
    : validation_error(d.str()), diag(std::move(d)) {}

namespace {

struct Token {
  std::string text;
  int line = 1;
  int col = 1;
};

[[noreturn]] void fail(const std::string& code, const Token& at,
                       const std::string& message) {
  throw parse_diagnostic({code, at.line, at.col, message});
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    if (ch == '{' || ch == '}' || ch == ';') {
      out.push_back({std::string(1, ch), line, col});
      ++col;
      ++i;
      continue;
    }
    Token t{"", line, col};
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '{' && text[i] != '}' && text[i] != ';') {
      t.text += text[i];
      ++col;
      ++i;
    }
    out.push_back(std::move(t));
  }
  out.push_back({"", line, col});  // end marker
  return out;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  const Token& next() {
    if (pos + 1 >= toks.size()) return toks[pos];
    return toks[pos++];
  }
  bool at_end() const { return peek().text.empty(); }

  const Token& expect(const std::string& what) {
    if (at_end()) fail("PARSE_ERROR", peek(), "expected " + what + ", found end of input");
    return next();
  }

  void expect_literal(const std::string& lit) {
    const Token& t = expect("'" + lit + "'");
    if (t.text != lit)
      fail("PARSE_ERROR", t, "expected '" + lit + "', found '" + t.text + "'");
  }

  // Section body: tokens up to the terminating ';'.
  std::vector<Token> section_body() {
    std::vector<Token> body;
    while (true) {
      if (at_end() || peek().text == "}" || peek().text == "{")
        fail("PARSE_ERROR", peek(), "section is missing its terminating ';'");
      if (peek().text == ";") {
        next();
        return body;
      }
      body.push_back(next());
    }
  }
};

// "lhs->rhs" mapping entry.
std::pair<std::string, std::string> split_arrow(const Token& t) {
  std::size_t p = t.text.find("->");
  if (p == std::string::npos)
    fail("PARSE_ERROR", t, "expected a 'from->to' entry, found '" + t.text + "'");
  return {t.text.substr(0, p), t.text.substr(p + 2)};
}

FinSet parse_elements(const std::vector<Token>& body, const char* what) {
  std::vector<std::string> names;
  for (const auto& t : body) {
    if (t.text == "stop")
      fail("PARSE_ERROR", t, "'stop' is reserved and cannot be declared");
    for (const auto& n : names)
      if (n == t.text) fail("DUPLICATE_NAME", t, what + (" '" + t.text + "' declared twice"));
    names.push_back(t.text);
  }
  if (names.empty() && std::string(what) != std::string("letter"))
    fail("PARSE_ERROR", body.empty() ? Token{} : body[0], std::string(what) + " list is empty");
  return FinSet(std::move(names));
}

struct Sections {
  std::map<std::string, std::vector<Token>> body;
  std::map<std::string, Token> head;
  Token close;  // the '}' token, anchors whole-structure diagnostics

  bool has(const std::string& s) const { return body.count(s) != 0; }
  const std::vector<Token>& at(const std::string& s, const char* kind) const {
    auto it = body.find(s);
    if (it == body.end())
      fail("NON_TOTAL_MAP", close, std::string(kind) + " requires a '" + s + "' section");
    return it->second;
  }
};

Sections parse_sections(Parser& p) {
  p.expect_literal("{");
  Sections s;
  while (true) {
    const Token& t = p.expect("a section or '}'");
    if (t.text == "}") {
      s.close = t;
      break;
    }
    if (s.body.count(t.text))
      fail("DUPLICATE_NAME", t, "section '" + t.text + "' appears twice");
    s.head[t.text] = t;
    s.body[t.text] = p.section_body();
  }
  if (!p.at_end())
    fail("PARSE_ERROR", p.peek(), "trailing input after '}'");
  return s;
}

void check_known(const FinSet& set, const std::string& n, const Token& at,
                 const char* what) {
  if (!set.contains(n))
    fail("UNKNOWN_ELEMENT", at, std::string(what) + " '" + n + "' is not declared");
}

ParsedStructure parse_idsucc_algebra(const Sections& s) {
  ParsedStructure out;
  out.kind = ParsedStructure::Kind::IdsuccAlgebra;
  out.alg.carrier = parse_elements(s.at("elements", "an algebra"), "element");
  const auto& zb = s.at("zero", "an algebra");
  if (zb.size() != 1)
    fail("PARSE_ERROR", s.head.at("zero"), "'zero' takes exactly one element");
  check_known(out.alg.carrier, zb[0].text, zb[0], "element");
  out.alg.zero = out.alg.carrier.at(zb[0].text);
  out.alg.succ.assign(out.alg.carrier.size(), -1);
  for (const auto& t : s.at("succ", "an algebra")) {
    auto [from, to] = split_arrow(t);
    check_known(out.alg.carrier, from, t, "element");
    check_known(out.alg.carrier, to, t, "element");
    int fi = out.alg.carrier.at(from);
    if (out.alg.succ[fi] != -1)
      fail("DUPLICATE_NAME", t, "succ already defined at '" + from + "'");
    out.alg.succ[fi] = out.alg.carrier.at(to);
  }
  for (int i = 0; i < out.alg.size(); ++i)
    if (out.alg.succ[i] == -1)
      fail("NON_TOTAL_MAP", s.close, "succ is not defined at '" + out.alg.name(i) + "'");
  return out;
}

ParsedStructure parse_idsucc_coalgebra(const Sections& s) {
  ParsedStructure out;
  out.kind = ParsedStructure::Kind::IdsuccCoalgebra;
  out.coalg.carrier = parse_elements(s.at("elements", "a coalgebra"), "element");
  std::vector<int> step(out.coalg.carrier.size(), -2);
  for (const auto& t : s.at("step", "a coalgebra")) {
    auto [from, to] = split_arrow(t);
    check_known(out.coalg.carrier, from, t, "element");
    int fi = out.coalg.carrier.at(from);
    if (step[fi] != -2)
      fail("DUPLICATE_NAME", t, "step already defined at '" + from + "'");
    if (to == "stop") {
      step[fi] = -1;
    } else {
      check_known(out.coalg.carrier, to, t, "element");
      step[fi] = out.coalg.carrier.at(to);
    }
  }
  for (std::size_t i = 0; i < step.size(); ++i)
    if (step[i] == -2)
      fail("NON_TOTAL_MAP", s.close, "step is not defined at '" + out.coalg.name(static_cast<int>(i)) + "'");
  out.coalg.step = std::move(step);
  return out;
}

ParsedStructure parse_generic_algebra(const FunctorExpr& f, const Sections& s) {
  ParsedStructure out;
  out.kind = ParsedStructure::Kind::GenericAlgebra;
  out.fin_alg.functor = f;
  out.fin_alg.carrier = parse_elements(s.at("elements", "an algebra"), "element");
  FinSet dom = eval_on_set(f, out.fin_alg.carrier);
  for (const auto& t : s.at("alpha", "a generic algebra")) {
    auto [from, to] = split_arrow(t);
    check_known(dom, from, t, "functor element");
    check_known(out.fin_alg.carrier, to, t, "element");
    if (out.fin_alg.alpha.count(from))
      fail("DUPLICATE_NAME", t, "alpha already defined at '" + from + "'");
    out.fin_alg.alpha[from] = to;
  }
  for (const auto& u : dom.names())
    if (!out.fin_alg.alpha.count(u))
      fail("NON_TOTAL_MAP", s.close, "alpha is not defined at '" + u + "'");
  return out;
}

ParsedStructure parse_generic_coalgebra(const FunctorExpr& f, const Sections& s) {
  ParsedStructure out;
  out.kind = ParsedStructure::Kind::GenericCoalgebra;
  out.fin_coalg.functor = f;
  out.fin_coalg.carrier = parse_elements(s.at("elements", "a coalgebra"), "element");
  FinSet cod = eval_on_set(f, out.fin_coalg.carrier);
  for (const auto& t : s.at("chi", "a generic coalgebra")) {
    auto [from, to] = split_arrow(t);
    check_known(out.fin_coalg.carrier, from, t, "element");
    check_known(cod, to, t, "functor element");
    if (out.fin_coalg.chi.count(from))
      fail("DUPLICATE_NAME", t, "chi already defined at '" + from + "'");
    out.fin_coalg.chi[from] = to;
  }
  for (const auto& c : out.fin_coalg.carrier.names())
    if (!out.fin_coalg.chi.count(c))
      fail("NON_TOTAL_MAP", s.close, "chi is not defined at '" + c + "'");
  return out;
}

ParsedStructure parse_automaton(const Sections& s) {
  ParsedStructure out;
  out.kind = ParsedStructure::Kind::Automaton;
  MooreCoalgebra& m = out.automaton;
  m.alphabet = parse_elements(s.at("alphabet", "an automaton"), "letter");
  m.states = parse_elements(s.at("states", "an automaton"), "state");
  for (const auto& q : m.states.names()) m.accept[q] = "ff";
  if (s.has("accept"))
    for (const auto& t : s.body.at("accept")) {
      check_known(m.states, t.text, t, "state");
      if (m.accept.at(t.text) == "tt")
        fail("DUPLICATE_NAME", t, "state '" + t.text + "' accepted twice");
      m.accept[t.text] = "tt";
    }
  for (const auto& t : s.at("delta", "an automaton")) {
    auto [from, to] = split_arrow(t);
    std::size_t comma = from.find(',');
    if (comma == std::string::npos)
      fail("PARSE_ERROR", t, "expected a 'state,letter->state' entry");
    std::string q = from.substr(0, comma), letter = from.substr(comma + 1);
    check_known(m.states, q, t, "state");
    check_known(m.alphabet, letter, t, "letter");
    check_known(m.states, to, t, "state");
    if (m.delta.count({q, letter}))
      fail("DUPLICATE_NAME", t, "delta already defined at (" + q + "," + letter + ")");
    m.delta[{q, letter}] = to;
  }
  for (const auto& q : m.states.names())
    for (const auto& letter : m.alphabet.names())
      if (!m.delta.count({q, letter}))
        fail("NON_TOTAL_MAP", s.close,
             "delta is not defined at (" + q + "," + letter + ")");
  return out;
}

}  // namespace

ParsedStructure parse_structure(const std::string& text) {
  Parser p{tokenize(text)};
  const Token& kind = p.expect("'algebra', 'coalgebra' or 'automaton'");
  if (kind.text == "automaton") {
    Sections s = parse_sections(p);
    return parse_automaton(s);
  }
  if (kind.text != "algebra" && kind.text != "coalgebra")
    fail("PARSE_ERROR", kind,
         "expected 'algebra', 'coalgebra' or 'automaton', found '" + kind.text + "'");
  // functor expression: tokens up to '{'
  std::string ftext;
  Token fstart = p.peek();
  while (!p.at_end() && p.peek().text != "{") {
    if (!ftext.empty()) ftext += " ";
    ftext += p.next().text;
  }
  if (ftext.empty()) fail("PARSE_ERROR", fstart, "missing functor expression");
  FunctorExpr f = FunctorExpr::id();
  try {
    f = parse_functor(ftext);
  } catch (const validation_error& e) {
    fail("PARSE_ERROR", fstart, e.what());
  }
  Sections s = parse_sections(p);
  if (f == idsucc_functor())
    return kind.text == "algebra" ? parse_idsucc_algebra(s)
                                  : parse_idsucc_coalgebra(s);
  return kind.text == "algebra" ? parse_generic_algebra(f, s)
                                : parse_generic_coalgebra(f, s);
}

std::string print_structure(const ParsedStructure& s) {
  auto elements = [](const FinSet& set) {
    std::string out = "  elements";
    for (const auto& n : set.names()) out += " " + n;
    return out + ";\n";
  };
  std::string out;
  switch (s.kind) {
    case ParsedStructure::Kind::IdsuccAlgebra: {
      out = "algebra idsucc {\n" + elements(s.alg.carrier);
      out += "  zero " + s.alg.name(s.alg.zero) + ";\n  succ";
      for (int i = 0; i < s.alg.size(); ++i)
        out += " " + s.alg.name(i) + "->" + s.alg.name(s.alg.succ[i]);
      out += ";\n}\n";
      break;
    }
    case ParsedStructure::Kind::IdsuccCoalgebra: {
      out = "coalgebra idsucc {\n" + elements(s.coalg.carrier);
      out += "  step";
      for (int i = 0; i < s.coalg.size(); ++i)
        out += " " + s.coalg.name(i) + "->" +
               (s.coalg.step[i] < 0 ? "stop" : s.coalg.name(s.coalg.step[i]));
      out += ";\n}\n";
      break;
    }
    case ParsedStructure::Kind::GenericAlgebra: {
      out = "algebra " + s.fin_alg.functor.to_string() + " {\n" +
            elements(s.fin_alg.carrier);
      out += "  alpha";
      for (const auto& [u, v] : s.fin_alg.alpha) out += " " + u + "->" + v;
      out += ";\n}\n";
      break;
    }
    case ParsedStructure::Kind::GenericCoalgebra: {
      out = "coalgebra " + s.fin_coalg.functor.to_string() + " {\n" +
            elements(s.fin_coalg.carrier);
      out += "  chi";
      for (const auto& [c, u] : s.fin_coalg.chi) out += " " + c + "->" + u;
      out += ";\n}\n";
      break;
    }
    case ParsedStructure::Kind::Automaton: {
      const MooreCoalgebra& m = s.automaton;
      out = "automaton {\n";
      out += "  alphabet";
      for (const auto& n : m.alphabet.names()) out += " " + n;
      out += ";\n  states";
      for (const auto& n : m.states.names()) out += " " + n;
      out += ";\n  accept";
      for (const auto& n : m.states.names())
        if (m.accept.at(n) == "tt") out += " " + n;
      out += ";\n  delta";
      for (const auto& q : m.states.names())
        for (const auto& letter : m.alphabet.names())
          out += " " + q + "," + letter + "->" + m.delta.at({q, letter});
      out += ";\n}\n";
      break;
    }
  }
  return out;
}

}  // namespace mlab
