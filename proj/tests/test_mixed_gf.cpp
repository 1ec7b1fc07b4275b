#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mlab/mixed_gf.hpp"

using namespace mlab;

namespace {

MooreCoalgebra loop_automaton(const FinSet& alphabet, const std::string& acc) {
  MooreCoalgebra c;
  c.alphabet = alphabet;
  c.states = FinSet({"q"});
  c.accept["q"] = acc;
  for (const auto& s : alphabet.names()) c.delta[{"q", s}] = "q";
  return c;
}

MooreCoalgebra swap_automaton() {
  MooreCoalgebra c;
  c.alphabet = FinSet({"a"});
  c.states = FinSet({"q0", "q1"});
  c.accept = {{"q0", "tt"}, {"q1", "tt"}};
  c.delta = {{{"q0", "a"}, "q1"}, {{"q1", "a"}, "q0"}};
  return c;
}

GFAlgebra random_gf(std::mt19937& rng, const FinSet& alphabet, int n,
                    const char* prefix = "x") {
  GFAlgebra a;
  a.functor = gf_functor(alphabet);
  a.carrier = canonical_set(prefix, n);
  FinSet dom = eval_on_set(a.functor, a.carrier);
  for (const auto& u : dom.names()) a.alpha[u] = a.carrier.name(rng() % n);
  return a;
}

MooreCoalgebra random_automaton(std::mt19937& rng, const FinSet& alphabet,
                                int n) {
  MooreCoalgebra c;
  c.alphabet = alphabet;
  c.states = canonical_set("q", n);
  for (const auto& q : c.states.names()) {
    c.accept[q] = rng() % 2 ? "tt" : "ff";
    for (const auto& s : alphabet.names())
      c.delta[{q, s}] = c.states.name(rng() % n);
  }
  return c;
}

}  // namespace

TEST_CASE("automata are coalgebras of 2 x X^Sigma") {
  MooreCoalgebra c;
  c.alphabet = FinSet({"a", "b"});
  c.states = FinSet({"q0", "q1"});
  c.accept = {{"q0", "tt"}, {"q1", "ff"}};
  c.delta = {{{"q0", "a"}, "q1"},
             {{"q0", "b"}, "q0"},
             {{"q1", "a"}, "q1"},
             {{"q1", "b"}, "q0"}};
  FinCoalgebra f = c.to_fin();
  CHECK(f.functor == automaton_functor(c.alphabet));
  CHECK(f.chi.at("q0") == "(tt,[q1,q0])");
  CHECK(f.chi.at("q1") == "(ff,[q1,q0])");
  CHECK_NOTHROW(f.validate());
}

TEST_CASE("automaton validation reports missing and stray entries") {
  MooreCoalgebra c;
  c.alphabet = FinSet({"a"});
  c.states = FinSet({"q0"});
  c.accept["q0"] = "tt";
  CHECK_THROWS_AS(c.validate(), validation_error);  // delta missing
  c.delta[{"q0", "a"}] = "nowhere";
  CHECK_THROWS_AS(c.validate(), validation_error);  // delta leaves states
  c.delta[{"q0", "a"}] = "q0";
  c.accept["q0"] = "yes";
  CHECK_THROWS_AS(c.validate(), validation_error);  // accept not in 2
  c.accept["q0"] = "tt";
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("convolution carrier has size |A|^|C| and a total structure") {
  std::mt19937 rng(167);
  FinSet sigma({"a"});
  for (int trial = 0; trial < 10; ++trial) {
    int na = 1 + rng() % 2, nc = 1 + rng() % 2;
    GFAlgebra a = random_gf(rng, sigma, na);
    MooreCoalgebra c = random_automaton(rng, sigma, nc);
    GFAlgebra conv = gf_convolution(c, a);
    double expect = std::pow(static_cast<double>(na), nc);
    CHECK(conv.carrier.size() == static_cast<std::size_t>(expect));
    CHECK_NOTHROW(conv.validate());
  }
}

TEST_CASE("convolution at an always-accepting one-state loop transports A") {
  std::mt19937 rng(173);
  for (int trial = 0; trial < 8; ++trial) {
    FinSet sigma = trial % 2 ? FinSet({"a"}) : FinSet({"a", "b"});
    GFAlgebra a = random_gf(rng, sigma, 1 + rng() % 3);
    MooreCoalgebra c = loop_automaton(sigma, "tt");
    GFAlgebra conv = gf_convolution(c, a);
    NameMap phi;
    for (const auto& x : a.carrier.names())
      phi[x] = func_name({x});
    CHECK(check_alg_hom(a, conv, phi).ok);
    // a bijective homomorphism: the structures agree elementwise
    NameMap gphi = eval_on_map(a.functor, a.carrier, phi);
    for (const auto& [u, v] : a.alpha)
      CHECK(conv.alpha.at(gphi.at(u)) == phi.at(v));
  }
}

TEST_CASE("the empty alphabet degenerates to a pointed-set convolution") {
  std::mt19937 rng(179);
  FinSet sigma{};
  GFAlgebra a = random_gf(rng, sigma, 2);
  MooreCoalgebra c = loop_automaton(sigma, "ff");
  GFAlgebra conv = gf_convolution(c, a);
  CHECK(conv.carrier.size() == 2);
  CHECK_NOTHROW(conv.validate());
}

TEST_CASE("hom count into a one-element target is 1") {
  std::mt19937 rng(181);
  FinSet sigma({"a"});
  GFAlgebra a = random_gf(rng, sigma, 2);
  GFAlgebra b = random_gf(rng, sigma, 1);
  for (int nc = 1; nc <= 2; ++nc)
    CHECK(gf_measuring_count(random_automaton(rng, sigma, nc), a, b) == 1);
}

TEST_CASE("hom count at the accepting loop with A = B is at least 1") {
  std::mt19937 rng(191);
  FinSet sigma({"a"});
  for (int trial = 0; trial < 6; ++trial) {
    GFAlgebra a = random_gf(rng, sigma, 1 + rng() % 2);
    CHECK(gf_measuring_count(loop_automaton(sigma, "tt"), a, a) >= 1);
  }
}

TEST_CASE("hom counts are invariant under renaming the automaton states") {
  std::mt19937 rng(193);
  FinSet sigma({"a"});
  for (int trial = 0; trial < 6; ++trial) {
    GFAlgebra a = random_gf(rng, sigma, 2);
    GFAlgebra b = random_gf(rng, sigma, 2, "y");
    MooreCoalgebra c = random_automaton(rng, sigma, 2);
    // swap the state names, reversing their canonical order
    NameMap ren = {{"q0", "s1"}, {"q1", "s0"}};
    MooreCoalgebra d;
    d.alphabet = sigma;
    d.states = FinSet({"s0", "s1"});
    for (const auto& q : c.states.names()) d.accept[ren.at(q)] = c.accept.at(q);
    for (const auto& [k, v] : c.delta) d.delta[{ren.at(k.first), k.second}] = ren.at(v);
    CHECK(gf_measuring_count(c, a, b) == gf_measuring_count(d, a, b));
  }
}

TEST_CASE("automaton homomorphisms induce contravariant algebra maps") {
  std::mt19937 rng(197);
  MooreCoalgebra c = swap_automaton();
  MooreCoalgebra c2 = loop_automaton(FinSet({"a"}), "tt");
  // collapsing both states onto the loop is an automaton homomorphism
  for (int trial = 0; trial < 6; ++trial) {
    GFAlgebra a = random_gf(rng, c.alphabet, 1 + rng() % 2);
    GFAlgebra from = gf_convolution(c2, a);
    GFAlgebra to = gf_convolution(c, a);
    NameMap induced;
    for (const auto& t : all_tuples(a.carrier, 1))
      induced[func_name(t)] = func_name({t[0], t[0]});
    CHECK(check_alg_hom(from, to, induced).ok);
  }
}

TEST_CASE("mismatched alphabets and oversized instances are refused") {
  std::mt19937 rng(199);
  GFAlgebra a = random_gf(rng, FinSet({"a"}), 2);
  MooreCoalgebra c = loop_automaton(FinSet({"a", "b"}), "tt");
  CHECK_THROWS_AS(gf_convolution(c, a), precondition_failed);
  MooreCoalgebra big = random_automaton(rng, FinSet({"a"}), 3);
  GFAlgebra a3 = random_gf(rng, FinSet({"a"}), 3);
  CHECK_THROWS_AS(gf_convolution(big, a3, 20), bound_exceeded);
}
