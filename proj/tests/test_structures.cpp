#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mlab/structures.hpp"

using namespace mlab;

namespace {

SuccCoalgebra random_coalgebra(std::mt19937& rng, int n) {
  SuccCoalgebra c;
  c.carrier = canonical_set("s", n);
  for (int i = 0; i < n; ++i)
    c.step.push_back(static_cast<int>(rng() % (n + 1)) - 1);
  return c;
}

SuccAlgebra random_algebra(std::mt19937& rng, int n) {
  SuccAlgebra a;
  a.carrier = canonical_set("a", n);
  a.zero = rng() % n;
  for (int i = 0; i < n; ++i) a.succ.push_back(rng() % n);
  return a;
}

// Step-by-step simulation capped at `cap` steps; infinite if no stop by then.
Index simulate_index(const SuccCoalgebra& c, int state, int cap) {
  int cur = state;
  for (int k = 0; k <= cap; ++k) {
    if (c.step[cur] < 0) return Index::fin(k);
    cur = c.step[cur];
  }
  return Index::inf();
}

}  // namespace

TEST_CASE("index_of on the standard families") {
  SuccCoalgebra c3 = std_coalgebra(3);
  CHECK(index_of(c3, c3.carrier.at("2")) == Index::fin(2));
  for (int k = 0; k <= 2; ++k)
    CHECK(index_of(std_coalgebra(2), k) == Index::fin(k));
  CHECK(index_of(point_coalgebra(), 0) == Index::inf());
}

TEST_CASE("index_of agrees with step-by-step simulation on random instances") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    SuccCoalgebra c = random_coalgebra(rng, 5);
    for (int s = 0; s < c.size(); ++s)
      CHECK(index_of(c, s) == simulate_index(c, s, 5));
  }
}

TEST_CASE("finite index values lie below the state count and hit stop exactly") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    SuccCoalgebra c = random_coalgebra(rng, 6);
    for (int s = 0; s < c.size(); ++s) {
      Index ix = index_of(c, s);
      if (ix.infinite) continue;
      CHECK(ix.value < c.size());
      int cur = s;
      for (long k = 0; k < ix.value; ++k) {
        CHECK(c.step[cur] >= 0);
        cur = c.step[cur];
      }
      CHECK(c.step[cur] == -1);
    }
  }
}

TEST_CASE("std_algebra saturates at n") {
  SuccAlgebra a = std_algebra(2);
  CHECK(a.succ[a.carrier.at("2")] == a.carrier.at("2"));
  CHECK(a.succ[a.carrier.at("0")] == a.carrier.at("1"));
}

TEST_CASE("unit coalgebra of id+1 steps into the first summand") {
  FinCoalgebra u = unit_coalgebra(idsucc_functor());
  CHECK(u.chi.at("*") == "inl(*)");
  CHECK(index_of(SuccCoalgebra::from_fin(u), 0) == Index::inf());
}

TEST_CASE("canonical_from_initial on <n> and on a pure cycle") {
  SuccAlgebra a = std_algebra(3);
  Lasso l = canonical_from_initial(a);
  CHECK(l.prefix == 3);
  CHECK(l.cycle == 1);
  for (long m = 0; m < 10; ++m)
    CHECK(a.name(l.at(m)) == std::to_string(std::min<long>(m, 3)));

  SuccAlgebra cyc;
  cyc.carrier = canonical_set("c", 3);
  cyc.zero = 0;
  cyc.succ = {1, 2, 0};
  Lasso lc = canonical_from_initial(cyc);
  CHECK(lc.prefix == 0);
  CHECK(lc.cycle == 3);
}

TEST_CASE("canonical_from_initial agrees with direct iteration") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    SuccAlgebra a = random_algebra(rng, 4);
    Lasso l = canonical_from_initial(a);
    CHECK(static_cast<int>(l.chain.size()) <= a.size() + 1);
    int cur = a.zero;
    for (long m = 0; m < 8; ++m) {
      CHECK(l.at(m) == cur);
      cur = a.succ[cur];
    }
  }
}

TEST_CASE("is_N_generated") {
  CHECK(is_N_generated(std_algebra(4)));

  // <2> plus a detached succ chain x -> y -> y
  SuccAlgebra a;
  a.carrier = FinSet({"0", "1", "2", "x", "y"});
  a.zero = a.carrier.at("0");
  a.succ.resize(5);
  a.succ[a.carrier.at("0")] = a.carrier.at("1");
  a.succ[a.carrier.at("1")] = a.carrier.at("2");
  a.succ[a.carrier.at("2")] = a.carrier.at("2");
  a.succ[a.carrier.at("x")] = a.carrier.at("y");
  a.succ[a.carrier.at("y")] = a.carrier.at("y");
  CHECK_FALSE(is_N_generated(a));

  SuccAlgebra pt;
  pt.carrier = FinSet({"p"});
  pt.zero = 0;
  pt.succ = {0};
  CHECK(is_N_generated(pt));
}

TEST_CASE("subcoalgebras of <2>^ form the chain of down-sets") {
  SubcoalgebraListing l = subcoalgebras(std_coalgebra(2));
  REQUIRE(l.subsets.size() == 4);
  CHECK(l.subsets[0].empty());
  CHECK(l.subsets[1] == std::vector<int>{0});
  CHECK(l.subsets[2] == std::vector<int>{0, 1});
  CHECK(l.subsets[3] == std::vector<int>{0, 1, 2});
}

TEST_CASE("subcoalgebras of the one-point self-loop") {
  SubcoalgebraListing l = subcoalgebras(point_coalgebra());
  REQUIRE(l.subsets.size() == 2);
  CHECK(l.subsets[0].empty());
  CHECK(l.subsets[1] == std::vector<int>{0});
}

TEST_CASE("every listed subset is closed and the listing is a lattice") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    SuccCoalgebra c = random_coalgebra(rng, 5);
    SubcoalgebraListing l = subcoalgebras(c);
    std::set<std::set<int>> family;
    for (const auto& sub : l.subsets) {
      std::set<int> s(sub.begin(), sub.end());
      for (int i : s)
        if (c.step[i] >= 0) CHECK(s.count(c.step[i]) == 1);
      family.insert(s);
    }
    for (const auto& s : family)
      for (const auto& t : family) {
        std::set<int> both, either = s;
        for (int i : s)
          if (t.count(i)) both.insert(i);
        either.insert(t.begin(), t.end());
        CHECK(family.count(both) == 1);
        CHECK(family.count(either) == 1);
      }
  }
}

TEST_CASE("subcoalgebras refuses oversized inputs") {
  std::mt19937 rng(23);
  CHECK_THROWS_AS(subcoalgebras(random_coalgebra(rng, 9)), bound_exceeded);
}

TEST_CASE("quotient_algebras of <1>") {
  QuotientListing l = quotient_algebras(std_algebra(1));
  REQUIRE(l.algebras.size() == 2);
  // restricted growth order lists the collapse to <0> first, then <1> itself
  CHECK(l.algebras[0].size() == 1);
  CHECK(l.algebras[0].succ[0] == 0);
  CHECK(l.algebras[1].size() == 2);
}

TEST_CASE("quotient listing contains the identity and each map is a hom") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    SuccAlgebra a = random_algebra(rng, 4);
    QuotientListing l = quotient_algebras(a);
    bool has_identity = false;
    for (std::size_t qi = 0; qi < l.algebras.size(); ++qi) {
      const SuccAlgebra& q = l.algebras[qi];
      const auto& blk = l.block_of[qi];
      if (q.size() == a.size()) has_identity = true;
      // the projection onto block names must be an algebra homomorphism
      auto block_name = [&](int b) {
        std::string s = "{";
        bool first = true;
        for (int i = 0; i < a.size(); ++i)
          if (blk[i] == b) {
            if (!first) s += ",";
            s += a.name(i);
            first = false;
          }
        return s + "}";
      };
      CHECK(q.name(q.zero) == block_name(blk[a.zero]));
      for (int i = 0; i < a.size(); ++i) {
        int qi2 = q.carrier.at(block_name(blk[i]));
        CHECK(q.name(q.succ[qi2]) == block_name(blk[a.succ[i]]));
      }
    }
    CHECK(has_identity);
  }
}

TEST_CASE("quotient_algebras refuses oversized inputs") {
  std::mt19937 rng(31);
  CHECK_THROWS_AS(quotient_algebras(random_algebra(rng, 7)), bound_exceeded);
}

TEST_CASE("product coalgebra index is the minimum of the component indices") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    SuccCoalgebra c = random_coalgebra(rng, 3);
    SuccCoalgebra d = random_coalgebra(rng, 3);
    SuccCoalgebra p = succ_product(c, d);
    for (int i = 0; i < c.size(); ++i)
      for (int j = 0; j < d.size(); ++j) {
        Index ic = index_of(c, i), id = index_of(d, j);
        Index expect = (ic.infinite && id.infinite) ? Index::inf()
                       : ic.infinite               ? id
                       : id.infinite               ? ic
                       : Index::fin(std::min(ic.value, id.value));
        int pij = p.carrier.at(pair_name(c.name(i), d.name(j)));
        CHECK(index_of(p, pij) == expect);
      }
  }
}

TEST_CASE("product with the unit coalgebra is isomorphic via relabeling") {
  std::mt19937 rng(41);
  for (int n = 1; n <= 4; ++n) {
    SuccCoalgebra c = random_coalgebra(rng, n);
    FinCoalgebra p = product_coalgebra(c.to_fin(), unit_coalgebra(idsucc_functor()));
    NameMap relabel;
    for (const auto& x : c.carrier.names()) relabel[pair_name(x, "*")] = x;
    CHECK(is_coalgebra_iso(p, c.to_fin(), relabel));
  }
}

TEST_CASE("associator and symmetry are coalgebra isomorphisms") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    SuccCoalgebra c = random_coalgebra(rng, 2);
    SuccCoalgebra d = random_coalgebra(rng, 3);
    SuccCoalgebra e = random_coalgebra(rng, 2);
    FinCoalgebra cd_e = product_coalgebra(succ_product(c, d).to_fin(), e.to_fin());
    FinCoalgebra c_de = product_coalgebra(c.to_fin(), succ_product(d, e).to_fin());
    NameMap assoc;
    for (const auto& x : c.carrier.names())
      for (const auto& y : d.carrier.names())
        for (const auto& z : e.carrier.names())
          assoc[pair_name(pair_name(x, y), z)] = pair_name(x, pair_name(y, z));
    CHECK(is_coalgebra_iso(cd_e, c_de, assoc));

    FinCoalgebra cd = succ_product(c, d).to_fin();
    FinCoalgebra dc = succ_product(d, c).to_fin();
    NameMap sym;
    for (const auto& x : c.carrier.names())
      for (const auto& y : d.carrier.names())
        sym[pair_name(x, y)] = pair_name(y, x);
    CHECK(is_coalgebra_iso(cd, dc, sym));
  }
}

TEST_CASE("lazy_saturation: N does not saturate within 100 steps") {
  SaturationResult r = lazy_saturation(nat_lazy(), 100);
  CHECK_FALSE(r.saturated);
  CHECK(r.chain.size() == 100);
  CHECK(r.chain[0] == "0");
  CHECK(r.chain[99] == "99");
}

TEST_CASE("lazy_saturation of a finite algebra view matches its lasso") {
  SuccAlgebra a = std_algebra(2);
  SaturationResult r = lazy_saturation(lazy_of(a), 50);
  CHECK(r.saturated);
  CHECK(r.prefix == 2);
  CHECK(r.cycle == 1);
  CHECK(r.chain == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("lazy_saturation of the pointwise function chain for <n>^") {
  // functions {0..n} -> N as tuples, successor rule per the convolution
  // structure: (f+1)(0) = 0, (f+1)(k) = f(k-1) + 1
  const int n = 3;
  LazyAlgebra l;
  l.zero = [] { return func_name(std::vector<std::string>(n + 1, "0")); };
  l.succ = [](const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += s[i];
      }
    }
    parts.push_back(cur);
    std::vector<std::string> next(parts.size());
    next[0] = "0";
    for (std::size_t k = 1; k < parts.size(); ++k)
      next[k] = std::to_string(std::stol(parts[k - 1]) + 1);
    return func_name(next);
  };
  SaturationResult r = lazy_saturation(l, 50);
  CHECK(r.saturated);
  CHECK(r.prefix == n);
  CHECK(r.cycle == 1);
  CHECK(r.chain.back() == "[0,1,2,3]");
}

TEST_CASE("subterminal names: display and embedding order") {
  CHECK(SubterminalName::bracket(2).str() == "<2>^");
  CHECK(SubterminalName::bracket(1).embeds_in(SubterminalName::bracket(3)));
  CHECK_FALSE(SubterminalName::bracket(3).embeds_in(SubterminalName::bracket(1)));
  CHECK(SubterminalName::ipoint().embeds_in(SubterminalName::ninfinity()));
  CHECK_FALSE(SubterminalName::ipoint().embeds_in(SubterminalName::nminus()));
  CHECK(SubterminalName::empty().embeds_in(SubterminalName::ipoint()));
  CHECK(SubterminalName::bracket(5).embeds_in(SubterminalName::nminus()));
}

TEST_CASE("fin round-trips and validation") {
  std::mt19937 rng(47);
  SuccAlgebra a = random_algebra(rng, 4);
  CHECK(SuccAlgebra::from_fin(a.to_fin()).succ == a.succ);
  SuccCoalgebra c = random_coalgebra(rng, 4);
  CHECK(SuccCoalgebra::from_fin(c.to_fin()).step == c.step);

  FinAlgebra bad = a.to_fin();
  bad.alpha.erase("inr(*)");
  CHECK_THROWS_AS(bad.validate(), validation_error);
}
