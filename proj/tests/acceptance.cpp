// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "mlab/initiality.hpp"
#include "mlab/laws.hpp"
#include "mlab/mixed_gf.hpp"

using namespace mlab;

namespace {

int failures = 0;

void criterion(const char* name, const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = std::string(" [") + e.what() + "]";
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %-60s (%.1fs)%s\n", ok ? "PASS" : "FAIL", name, sec, err.c_str());
  if (!ok) ++failures;
}

bool isomorphic(const SuccAlgebra& a, const SuccAlgebra& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> p(a.size());
  for (int i = 0; i < a.size(); ++i) p[i] = i;
  do {
    if (p[a.zero] != b.zero) continue;
    bool ok = true;
    for (int i = 0; i < a.size() && ok; ++i)
      if (p[a.succ[i]] != b.succ[p[i]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// All coalgebras on {s0..s{n-1}}, n <= max_size, up to isomorphism.
std::vector<SuccCoalgebra> all_coalgebras_upto_iso(int max_size) {
  std::vector<SuccCoalgebra> out;
  for (int n = 0; n <= max_size; ++n) {
    FinSet carrier = canonical_set("s", n);
    std::vector<std::vector<int>> perms;
    {
      std::vector<int> p(n);
      for (int i = 0; i < n; ++i) p[i] = i;
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<int> t(n, -1);
    while (true) {
      bool minimal = true;
      for (const auto& p : perms) {
        std::vector<int> inv(n);
        for (int i = 0; i < n; ++i) inv[p[i]] = i;
        std::vector<int> conj(n);
        for (int i = 0; i < n; ++i) {
          int v = t[inv[i]];
          conj[i] = v < 0 ? -1 : p[v];
        }
        if (conj < t) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        SuccCoalgebra c;
        c.carrier = carrier;
        c.step = t;
        out.push_back(std::move(c));
      }
      int i = n - 1;
      while (i >= 0 && t[i] == n - 1) t[i--] = -1;
      if (i < 0) break;
      ++t[i];
    }
  }
  return out;
}

SuccCoalgebra random_coalgebra(std::mt19937& rng, int n) {
  SuccCoalgebra c;
  c.carrier = canonical_set("s", n);
  for (int i = 0; i < n; ++i)
    c.step.push_back(static_cast<int>(rng() % (n + 1)) - 1);
  return c;
}

SuccAlgebra random_algebra(std::mt19937& rng, int n, const char* prefix) {
  SuccAlgebra a;
  a.carrier = canonical_set(prefix, n);
  a.zero = rng() % n;
  for (int i = 0; i < n; ++i) a.succ.push_back(rng() % n);
  return a;
}

Measuring make_measuring(const SuccCoalgebra& c, const SuccAlgebra& a,
                         const SuccAlgebra& b, const PhiTable& phi) {
  Measuring m;
  m.C = c.to_fin();
  m.A = a.to_fin();
  m.B = b.to_fin();
  m.phi = phi;
  return m;
}

// ---------------------------------------------------------------------------

bool classification_criterion() {
  std::vector<SuccAlgebra> fam = all_algebras_upto_iso(4);
  for (int n = 0; n <= 5; ++n) {
    SuccAlgebra a = std_algebra(n);
    for (const auto& b : fam) {
      Lasso lb = canonical_from_initial(b);
      SubterminalName s = classify_universal(a, b);
      SubterminalName expect = lb.at(n) == lb.at(n + 1)
                                   ? SubterminalName::ninfinity()
                                   : SubterminalName::bracket(n);
      if (!(s == expect)) return false;
      // cross-validation: measuring counts for every subterminal candidate
      if (enumerate_measurings(empty_coalgebra(), a, b).items.size() != 1)
        return false;
      for (int k = 0; k <= n + 1; ++k) {
        long cnt = static_cast<long>(
            enumerate_measurings(std_coalgebra(k), a, b).items.size());
        if (cnt != (SubterminalName::bracket(k).embeds_in(s) ? 1 : 0))
          return false;
      }
      long icnt = static_cast<long>(
          enumerate_measurings(point_coalgebra(), a, b).items.size());
      if (icnt != (SubterminalName::ipoint().embeds_in(s) ? 1 : 0)) return false;
    }
  }
  return true;
}

bool convolution_chain_criterion() {
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 200; ++trial) {
    SuccCoalgebra c = random_coalgebra(rng, 1 + rng() % 4);
    SuccAlgebra b = random_algebra(rng, 1 + rng() % 4, "b");
    SuccAlgebra conv = convolution_succ(c, b);
    Lasso lb = canonical_from_initial(b);
    Lasso lc = canonical_from_initial(conv);
    for (long m = 0; m <= 8; ++m) {
      std::vector<std::string> parts = split_func(conv.name(lc.at(m)));
      for (int i = 0; i < c.size(); ++i) {
        Index ix = index_of(c, i);
        long k = ix.infinite ? m : std::min(ix.value, m);
        if (parts[i] != b.name(lb.at(k))) return false;
      }
    }
  }
  return true;
}

bool representability_criterion() {
  std::vector<SuccCoalgebra> cs = all_coalgebras_upto_iso(3);
  std::vector<SuccAlgebra> as = all_algebras_upto_iso(3);
  for (const auto& c : cs)
    for (const auto& a : as)
      for (const auto& b : as) {
        EnumResult ms = enumerate_measurings(c, a, b);
        SuccAlgebra conv = convolution_succ(c, b);
        std::vector<NameMap> homs = enumerate_alg_homs(a.to_fin(), conv.to_fin());
        if (ms.items.size() != homs.size()) return false;
        std::set<NameMap> homset(homs.begin(), homs.end());
        std::set<NameMap> curried;
        for (const auto& phi : ms.items) {
          NameMap h;
          for (const auto& an : a.carrier.names()) {
            std::vector<std::string> vals;
            for (const auto& cn : c.carrier.names())
              vals.push_back(phi.at(cn).at(an));
            h[an] = func_name(vals);
          }
          if (!homset.count(h)) return false;
          curried.insert(std::move(h));
        }
        if (curried.size() != ms.items.size()) return false;  // injective
        if (measuring_tensor(c, a).count_homs_into(b) !=
            static_cast<long>(ms.items.size()))
          return false;
      }
  return true;
}

bool enrichment_criterion() {
  std::vector<SuccCoalgebra> cs = all_coalgebras_upto_iso(2);
  std::vector<SuccAlgebra> as = all_algebras_upto_iso(2);
  // unitality along the one-state index-infinity coalgebra
  for (const auto& c : cs)
    for (const auto& a : as)
      for (const auto& b : as)
        for (const auto& fphi : enumerate_measurings(c, a, b).items) {
          Measuring f = make_measuring(c, a, b, fphi);
          Measuring left = compose_measurings(identity_measuring(b.to_fin()), f);
          Measuring right = compose_measurings(f, identity_measuring(a.to_fin()));
          if (!is_measuring(left).ok || !is_measuring(right).ok) return false;
          for (const auto& cn : c.carrier.names()) {
            if (left.phi.at(pair_name("*", cn)) != fphi.at(cn)) return false;
            if (right.phi.at(pair_name(cn, "*")) != fphi.at(cn)) return false;
          }
        }
  // associativity along the product associator
  for (const auto& a : as)
    for (const auto& b : as)
      for (const auto& c : cs) {
        EnumResult fs = enumerate_measurings(c, a, b);
        if (fs.items.empty()) continue;
        for (const auto& t : as)
          for (const auto& d : cs) {
            EnumResult gs = enumerate_measurings(d, b, t);
            if (gs.items.empty()) continue;
            for (const auto& u : as)
              for (const auto& e : cs) {
                EnumResult hs = enumerate_measurings(e, t, u);
                for (const auto& fphi : fs.items)
                  for (const auto& gphi : gs.items)
                    for (const auto& hphi : hs.items) {
                      Measuring f = make_measuring(c, a, b, fphi);
                      Measuring g = make_measuring(d, b, t, gphi);
                      Measuring h = make_measuring(e, t, u, hphi);
                      Measuring lhs =
                          compose_measurings(compose_measurings(h, g), f);
                      Measuring rhs =
                          compose_measurings(h, compose_measurings(g, f));
                      for (const auto& en : e.carrier.names())
                        for (const auto& dn : d.carrier.names())
                          for (const auto& cn : c.carrier.names())
                            if (lhs.phi.at(pair_name(pair_name(en, dn), cn)) !=
                                rhs.phi.at(pair_name(en, pair_name(dn, cn))))
                              return false;
                    }
              }
          }
      }
  return true;
}

bool point_measuring_criterion() {
  std::vector<SuccAlgebra> as = all_algebras_upto_iso(3);
  for (const auto& a : as)
    for (const auto& b : as) {
      EnumResult ms = enumerate_measurings(point_coalgebra(), a, b);
      std::vector<NameMap> homs = enumerate_alg_homs(a.to_fin(), b.to_fin());
      if (ms.items.size() != homs.size()) return false;
      std::set<NameMap> homset(homs.begin(), homs.end());
      std::set<NameMap> seen;
      for (const auto& phi : ms.items) {
        const NameMap& h = phi.begin()->second;
        if (!homset.count(h)) return false;
        seen.insert(h);
      }
      if (seen.size() != ms.items.size()) return false;
    }
  return true;
}

bool dual_criterion() {
  for (int n = 0; n <= 5; ++n) {
    if (!(dual_coalgebra_classified(std_algebra(n)) ==
          SubterminalName::bracket(n)))
      return false;
    SaturationResult r = lazy_saturation(convolution_lazy(std_coalgebra(n)), n + 5);
    if (!r.saturated || r.prefix != n || r.cycle != 1) return false;
    std::vector<std::string> top;
    for (int i = 0; i <= n; ++i) top.push_back(std::to_string(i));
    if (r.chain[r.prefix] != func_name(top)) return false;
  }
  return true;
}

bool cinitial_criterion() {
  std::vector<SuccAlgebra> fam = all_algebras_upto_iso(3);
  for (int n = 0; n <= 2; ++n) {
    CInitialReport r = is_C_initial_bounded(std_algebra(n), std_coalgebra(n), fam);
    if (r.verdict != CInitialReport::Verdict::OnFamily) return false;
    for (long cnt : r.counts)
      if (cnt != 1) return false;
    TerminalSearchResult t = terminal_C_initial_bounded(std_coalgebra(n), 4);
    if (!t.found || !isomorphic(t.algebra, std_algebra(n))) return false;
  }
  return true;
}

bool dualmap_criterion() {
  for (int n = 0; n <= 4; ++n) {
    SuccAlgebra a = std_algebra(n);
    NameMap h = unique_map_to_dual(a, std_coalgebra(n));
    for (int m = 0; m <= n; ++m) {
      std::vector<std::string> expect;
      for (int i = 0; i <= n; ++i)
        expect.push_back(std::to_string(std::min(i, m)));
      if (h.at(a.name(m)) != func_name(expect)) return false;
    }
    // independent uniqueness check against the saturated reachable part
    SaturationResult r = lazy_saturation(convolution_lazy(std_coalgebra(n)), n + 5);
    if (!r.saturated) return false;
    SuccAlgebra reach;
    reach.carrier = FinSet(std::vector<std::string>(
        r.chain.begin(), r.chain.begin() + r.prefix + 1));
    reach.zero = reach.carrier.at(r.chain[0]);
    reach.succ.resize(reach.size());
    for (int i = 0; i <= r.prefix; ++i)
      reach.succ[reach.carrier.at(r.chain[i])] =
          reach.carrier.at(r.chain[std::min(i + 1, r.prefix)]);
    std::vector<NameMap> homs = enumerate_alg_homs(a.to_fin(), reach.to_fin());
    if (homs.size() != 1 || homs[0] != h) return false;
  }
  return true;
}

bool lax_criterion() {
  if (!check_lax_axioms(idsucc_functor(), 3).all_pass()) return false;
  if (!check_lax_axioms(FunctorExpr::constant(bool_monoid("and")), 3).all_pass())
    return false;
  if (!check_lax_axioms(automaton_functor(FinSet({"a"})), 3).all_pass())
    return false;
  if (!check_lax_axioms(automaton_functor(FinSet({"a", "b"})), 3).all_pass())
    return false;
  if (!check_lax_axioms(FunctorExpr::comp(idsucc_functor(), idsucc_functor()), 3)
           .all_pass())
    return false;
  return true;
}

bool mixed_gf_criterion() {
  for (const FinSet& sigma : {FinSet({"a"}), FinSet({"a", "b"})}) {
    MooreCoalgebra loop;
    loop.alphabet = sigma;
    loop.states = FinSet({"q"});
    loop.accept["q"] = "tt";
    for (const auto& s : sigma.names()) loop.delta[{"q", s}] = "q";
    MooreCoalgebra swap;
    swap.alphabet = sigma;
    swap.states = FinSet({"q0", "q1"});
    swap.accept = {{"q0", "tt"}, {"q1", "tt"}};
    for (const auto& s : sigma.names()) {
      swap.delta[{"q0", s}] = "q1";
      swap.delta[{"q1", s}] = "q0";
    }
    for (int n = 1; n <= 2; ++n) {
      GFAlgebra a;
      a.functor = gf_functor(sigma);
      a.carrier = canonical_set("x", n);
      FinSet dom = eval_on_set(a.functor, a.carrier);
      std::vector<int> assign(dom.size(), 0);
      while (true) {
        a.alpha.clear();
        for (std::size_t i = 0; i < dom.size(); ++i)
          a.alpha[dom.name(i)] = a.carrier.name(assign[i]);
        // unit-automaton isomorphism
        GFAlgebra conv1 = gf_convolution(loop, a);
        NameMap phi, gphi;
        for (const auto& x : a.carrier.names()) phi[x] = func_name({x});
        gphi = eval_on_map(a.functor, a.carrier, phi);
        for (const auto& [u, v] : a.alpha)
          if (conv1.alpha.at(gphi.at(u)) != phi.at(v)) return false;
        // contravariant functoriality along swap -> loop
        const GFAlgebra& from = conv1;
        GFAlgebra to = gf_convolution(swap, a);
        NameMap induced;
        for (const auto& x : a.carrier.names())
          induced[func_name({x})] = func_name({x, x});
        if (!check_alg_hom(from, to, induced).ok) return false;
        // next structure map
        std::size_t i = dom.size();
        while (i > 0 && assign[i - 1] == n - 1) assign[--i] = 0;
        if (i == 0) break;
        ++assign[i - 1];
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion("universal measuring classification <n> vs N^inf", classification_criterion);
  criterion("convolution chain law min(index, m)", convolution_chain_criterion);
  criterion("representability bijections (convolution and tensor)", representability_criterion);
  criterion("enrichment laws: unital and associative composition", enrichment_criterion);
  criterion("point-coalgebra measurings are the total homomorphisms", point_measuring_criterion);
  criterion("dual coalgebra <n>^ and dual algebra lasso (n,1)", dual_criterion);
  criterion("C-initiality of <n> and terminal search", cinitial_criterion);
  criterion("unique map to the dual lands on min(i,m) tuples", dualmap_criterion);
  criterion("lax coherence for the functor battery", lax_criterion);
  criterion("mixed GF convolution: unit isomorphism and functoriality", mixed_gf_criterion);
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
