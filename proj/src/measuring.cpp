#include "mlab/measuring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace mlab {

namespace {

void require_phi_total(const Measuring& m) {
  for (const auto& c : m.C.carrier.names()) {
    auto it = m.phi.find(c);
    if (it == m.phi.end())
      throw validation_error("phi undefined for state " + c);
    for (const auto& a : m.A.carrier.names()) {
      auto jt = it->second.find(a);
      if (jt == it->second.end())
        throw validation_error("phi_" + c + " undefined on " + a);
      if (!m.B.carrier.contains(jt->second))
        throw validation_error("phi_" + c + "(" + a + ") = " + jt->second +
                               " is not in B");
    }
  }
}

// Ceiling-checked |b|^k against the bound; throws with a size estimate.
void check_power_bound(std::size_t base, std::size_t k, long bound,
                       const std::string& what) {
  double est = std::pow(static_cast<double>(base), static_cast<double>(k));
  if (est > static_cast<double>(bound))
    throw bound_exceeded(what + " refused: " + std::to_string(base) + "^" +
                         std::to_string(k) + " ~ " + std::to_string(est) +
                         " exceeds bound " + std::to_string(bound));
}

}  // namespace

long enum_bound_default() {
  if (const char* env = std::getenv("MLAB_ENUM_BOUND")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 1000000;
}

CheckResult is_measuring_generic(const Measuring& m) {
  if (!(m.C.functor == m.A.functor) || !(m.A.functor == m.B.functor))
    throw precondition_failed("measuring requires a shared functor");
  require_phi_total(m);
  const FunctorExpr& f = m.C.functor;
  FinSet ca = product_set(m.C.carrier, m.A.carrier);
  NameMap phihat;
  for (const auto& c : m.C.carrier.names())
    for (const auto& a : m.A.carrier.names())
      phihat[pair_name(c, a)] = m.phi.at(c).at(a);
  NameMap fphihat = eval_on_map(f, ca, phihat);
  PairMap nab = nabla(f, m.C.carrier, m.A.carrier);
  FinSet fa = eval_on_set(f, m.A.carrier);
  for (const auto& c : m.C.carrier.names())
    for (const auto& u : fa.names()) {
      const std::string& lhs = m.B.alpha.at(fphihat.at(nab.at({m.C.chi.at(c), u})));
      const std::string& rhs = m.phi.at(c).at(m.A.alpha.at(u));
      if (lhs != rhs) return {false, "(" + c + ", " + u + ")"};
    }
  return {};
}

CheckResult is_measuring_idsucc(const Measuring& m) {
  if (!(m.C.functor == idsucc_functor()))
    throw precondition_failed("fast path requires the id+1 functor");
  require_phi_total(m);
  SuccCoalgebra c = SuccCoalgebra::from_fin(m.C);
  SuccAlgebra a = SuccAlgebra::from_fin(m.A);
  SuccAlgebra b = SuccAlgebra::from_fin(m.B);
  FinSet fa = eval_on_set(idsucc_functor(), m.A.carrier);
  for (int ci = 0; ci < c.size(); ++ci) {
    const NameMap& pc = m.phi.at(c.name(ci));
    for (const auto& u : fa.names()) {
      std::string lhs, rhs;
      if (u == "inr(*)") {
        // (M1)
        rhs = pc.at(a.name(a.zero));
        lhs = b.name(b.zero);
      } else {
        const std::string an = u.substr(4, u.size() - 5);
        rhs = pc.at(a.name(a.succ[a.carrier.at(an)]));
        lhs = c.step[ci] < 0
                  ? b.name(b.zero)                                        // (M2)
                  : b.name(b.succ[b.carrier.at(                           // (M3)
                        m.phi.at(c.name(c.step[ci])).at(an))]);
      }
      if (lhs != rhs) return {false, "(" + c.name(ci) + ", " + u + ")"};
    }
  }
  return {};
}

CheckResult is_measuring(const Measuring& m) {
  if (m.C.functor == idsucc_functor() && m.A.functor == idsucc_functor() &&
      m.B.functor == idsucc_functor())
    return is_measuring_idsucc(m);
  return is_measuring_generic(m);
}

// ---------------------------------------------------------------------------
// Partial induction.

namespace {

template <typename Value, typename Zero, typename Succ>
PartialInductionOutcome partial_induction_impl(const SuccAlgebra& a, Zero zero,
                                               Succ succ, int cap) {
  if (!is_N_generated(a))
    throw precondition_failed(
        "partial induction requires the canonical map from N to be surjective");
  PartialInductionOutcome out;
  auto to_namemap = [&](const std::vector<Value>& f) {
    NameMap m;
    for (int i = 0; i < a.size(); ++i) m[a.name(i)] = f[i];
    return m;
  };
  std::vector<Value> f(a.size(), zero());
  out.steps.push_back(to_namemap(f));
  for (int c = 0; c < cap; ++c) {
    // (P2),(P3): next is forced at zero and on successor images; A being
    // N-generated makes that all of A.
    std::vector<Value> next(a.size());
    std::vector<bool> set(a.size(), false);
    next[a.zero] = zero();
    set[a.zero] = true;
    for (int i = 0; i < a.size(); ++i) {
      Value v = succ(f[i]);
      int t = a.succ[i];
      if (set[t] && next[t] != v) {
        out.partial_at = c;
        out.witness = "element " + a.name(t) + " requires both " +
                      std::string(next[t]) + " and " + std::string(v);
        return out;
      }
      next[t] = v;
      set[t] = true;
    }
    if (next == f) {
      out.total = true;
      out.diagonal = to_namemap(f);
      return out;
    }
    f = std::move(next);
    out.steps.push_back(to_namemap(f));
  }
  throw bound_exceeded(
      "partial induction did not stabilize within the step bound");
}

}  // namespace

PartialInductionOutcome partial_induction(const SuccAlgebra& a,
                                          const SuccAlgebra& b) {
  return partial_induction_impl<std::string>(
      a, [&] { return b.name(b.zero); },
      [&](const std::string& v) { return b.name(b.succ[b.carrier.at(v)]); },
      a.size() + 2);
}

PartialInductionOutcome partial_induction_lazy(const SuccAlgebra& a,
                                               const LazyAlgebra& b, int bound) {
  return partial_induction_impl<std::string>(a, b.zero, b.succ, bound);
}

// ---------------------------------------------------------------------------
// Enumeration.

EnumResult enumerate_measurings(const SuccCoalgebra& c, const SuccAlgebra& a,
                                const SuccAlgebra& b, EnumOptions opts) {
  long bound = opts.bound > 0 ? opts.bound : enum_bound_default();
  check_power_bound(b.carrier.size(), a.carrier.size(), bound,
                    "measuring enumeration");
  EnumResult out;
  if (c.size() == 0) {
    out.items.push_back({});
    return out;
  }
  // All candidate maps f: A -> B with f(zero_A) = zero_B, as index vectors.
  std::vector<std::vector<int>> nodes;
  {
    std::vector<int> free_pos;
    for (int i = 0; i < a.size(); ++i)
      if (i != a.zero) free_pos.push_back(i);
    for (const auto& tup : all_tuples(b.carrier, free_pos.size())) {
      std::vector<int> f(a.size());
      f[a.zero] = b.zero;
      for (std::size_t k = 0; k < free_pos.size(); ++k)
        f[free_pos[k]] = b.carrier.at(tup[k]);
      nodes.push_back(std::move(f));
    }
  }
  auto terminal = [&](const std::vector<int>& f) {
    for (int i = 0; i < a.size(); ++i)
      if (f[a.succ[i]] != b.zero) return false;
    return true;
  };
  auto edge = [&](const std::vector<int>& f, const std::vector<int>& g) {
    for (int i = 0; i < a.size(); ++i)
      if (f[a.succ[i]] != b.succ[g[i]]) return false;
    return true;
  };
  // Finite-index states first (dependencies point toward stop), then the
  // cyclic part; within a band, carrier order.
  std::vector<int> order(c.size());
  for (int i = 0; i < c.size(); ++i) order[i] = i;
  std::vector<Index> idx = all_indices(c);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    if (idx[x].infinite != idx[y].infinite) return !idx[x].infinite;
    if (!idx[x].infinite && idx[x].value != idx[y].value)
      return idx[x].value < idx[y].value;
    return x < y;
  });
  std::vector<int> assign(c.size(), -1);
  bool stop = false;
  std::function<void(int)> rec = [&](int k) {
    if (stop) return;
    if (k == c.size()) {
      PhiTable phi;
      for (int s = 0; s < c.size(); ++s) {
        NameMap& f = phi[c.name(s)];
        for (int i = 0; i < a.size(); ++i)
          f[a.name(i)] = b.name(nodes[assign[s]][i]);
      }
      out.items.push_back(std::move(phi));
      if (opts.max_count > 0 &&
          static_cast<long>(out.items.size()) >= opts.max_count) {
        out.truncated = true;
        stop = true;
      }
      return;
    }
    int s = order[k];
    for (std::size_t n = 0; n < nodes.size() && !stop; ++n) {
      const std::vector<int>& f = nodes[n];
      if (c.step[s] < 0) {
        if (!terminal(f)) continue;
      } else if (assign[c.step[s]] >= 0) {
        if (!edge(f, nodes[assign[c.step[s]]])) continue;
      }
      // states assigned earlier that step into s
      bool ok = true;
      for (int u = 0; u < c.size() && ok; ++u)
        if (c.step[u] == s && assign[u] >= 0 && u != s &&
            !edge(nodes[assign[u]], f))
          ok = false;
      if (c.step[s] == s && !edge(f, f)) ok = false;
      if (!ok) continue;
      assign[s] = static_cast<int>(n);
      rec(k + 1);
      assign[s] = -1;
    }
  };
  rec(0);
  std::sort(out.items.begin(), out.items.end());
  return out;
}

// ---------------------------------------------------------------------------
// Composition and unit.

Measuring compose_measurings(const Measuring& g, const Measuring& f) {
  if (!(g.A.functor == f.B.functor) || g.A.carrier != f.B.carrier ||
      g.A.alpha != f.B.alpha)
    throw precondition_failed("composition requires matching middle algebra");
  Measuring r;
  r.C = product_coalgebra(g.C, f.C);
  r.A = f.A;
  r.B = g.B;
  for (const auto& d : g.C.carrier.names())
    for (const auto& c : f.C.carrier.names())
      r.phi[pair_name(d, c)] = compose_maps(g.phi.at(d), f.phi.at(c));
  return r;
}

Measuring identity_measuring(const FinAlgebra& a) {
  Measuring m;
  m.C = unit_coalgebra(a.functor);
  m.A = a;
  m.B = a;
  m.phi["*"] = identity_map(a.carrier);
  return m;
}

// ---------------------------------------------------------------------------
// Convolution algebras.

FinAlgebra convolution_algebra(const FinCoalgebra& c, const FinAlgebra& b,
                               long bound) {
  if (!(c.functor == b.functor))
    throw precondition_failed("convolution requires a shared functor");
  if (bound <= 0) bound = enum_bound_default();
  check_power_bound(b.carrier.size(), c.carrier.size(), bound, "convolution");
  const FunctorExpr& f = c.functor;
  std::map<std::string, std::vector<std::string>> table;
  std::vector<std::string> names;
  for (const auto& tup : all_tuples(b.carrier, c.carrier.size())) {
    std::string n = func_name(tup);
    table[n] = tup;
    names.push_back(n);
  }
  FinAlgebra r;
  r.functor = f;
  r.carrier = FinSet(names);
  // structure map: alpha_B . F(ev) . nabla . (id x chi), pointwise in c
  FinSet xc = product_set(r.carrier, c.carrier);
  NameMap ev;
  for (const auto& fn : r.carrier.names())
    for (std::size_t i = 0; i < c.carrier.size(); ++i)
      ev[pair_name(fn, c.carrier.name(i))] = table.at(fn)[i];
  NameMap fev = eval_on_map(f, xc, ev);
  PairMap nab = nabla(f, r.carrier, c.carrier);
  FinSet fx = eval_on_set(f, r.carrier);
  for (const auto& u : fx.names()) {
    std::vector<std::string> vals(c.carrier.size());
    for (std::size_t i = 0; i < c.carrier.size(); ++i)
      vals[i] = b.alpha.at(fev.at(nab.at({u, c.chi.at(c.carrier.name(i))})));
    r.alpha[u] = func_name(vals);
  }
  return r;
}

SuccAlgebra convolution_succ(const SuccCoalgebra& c, const SuccAlgebra& b,
                             long bound) {
  if (bound <= 0) bound = enum_bound_default();
  check_power_bound(b.carrier.size(), c.carrier.size(), bound, "convolution");
  std::map<std::string, std::vector<int>> table;
  std::vector<std::string> names;
  for (const auto& tup : all_tuples(b.carrier, c.carrier.size())) {
    std::vector<int> v(tup.size());
    for (std::size_t i = 0; i < tup.size(); ++i) v[i] = b.carrier.at(tup[i]);
    std::string n = func_name(tup);
    table[n] = std::move(v);
    names.push_back(n);
  }
  SuccAlgebra r;
  r.carrier = FinSet(names);
  r.succ.resize(r.size());
  std::vector<std::string> zeros(c.size(), b.name(b.zero));
  r.zero = r.carrier.at(func_name(zeros));
  for (const auto& [n, v] : table) {
    std::vector<std::string> next(c.size());
    for (int i = 0; i < c.size(); ++i)
      next[i] = c.step[i] < 0 ? b.name(b.zero) : b.name(b.succ[v[c.step[i]]]);
    r.succ[r.carrier.at(n)] = r.carrier.at(func_name(next));
  }
  return r;
}

std::vector<std::string> split_func(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw validation_error("not a function tuple: " + s);
  std::vector<std::string> parts;
  if (s == "[]") return parts;
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
  return parts;
}

LazyAlgebra convolution_lazy(const SuccCoalgebra& c) {
  auto shared = std::make_shared<SuccCoalgebra>(c);
  LazyAlgebra l;
  l.zero = [shared] {
    return func_name(std::vector<std::string>(shared->size(), "0"));
  };
  l.succ = [shared](const std::string& s) {
    std::vector<std::string> v = split_func(s);
    std::vector<std::string> next(v.size());
    for (int i = 0; i < shared->size(); ++i)
      next[i] = shared->step[i] < 0
                    ? "0"
                    : std::to_string(std::stol(v[shared->step[i]]) + 1);
    return func_name(next);
  };
  l.description = "[C,N]";
  return l;
}

// ---------------------------------------------------------------------------
// Algebra homomorphisms.

CheckResult check_alg_hom(const FinAlgebra& a, const FinAlgebra& b,
                          const NameMap& h) {
  if (!(a.functor == b.functor))
    throw precondition_failed("hom check requires a shared functor");
  for (const auto& n : a.carrier.names()) {
    auto it = h.find(n);
    if (it == h.end() || !b.carrier.contains(it->second))
      throw validation_error("map is not total into B");
  }
  NameMap fh = eval_on_map(a.functor, a.carrier, h);
  FinSet fa = eval_on_set(a.functor, a.carrier);
  for (const auto& u : fa.names())
    if (h.at(a.alpha.at(u)) != b.alpha.at(fh.at(u)))
      return {false, u};
  return {};
}

namespace {

// Id+1 fast path: assignments propagate forward along succ chains.
void hom_rec_idsucc(const SuccAlgebra& a, const SuccAlgebra& b, int next_free,
                    std::vector<int>& h, std::vector<NameMap>& out) {
  while (next_free < a.size() && h[next_free] >= 0) ++next_free;
  if (next_free == a.size()) {
    NameMap m;
    for (int i = 0; i < a.size(); ++i) m[a.name(i)] = b.name(h[i]);
    out.push_back(std::move(m));
    return;
  }
  for (int v = 0; v < b.size(); ++v) {
    std::vector<int> trail;
    bool ok = true;
    int cur = next_free, val = v;
    // assign and chase the forced successor chain
    while (true) {
      if (h[cur] >= 0) {
        ok = h[cur] == val;
        break;
      }
      h[cur] = val;
      trail.push_back(cur);
      cur = a.succ[cur];
      val = b.succ[val];
    }
    if (ok) hom_rec_idsucc(a, b, next_free + 1, h, out);
    for (int i : trail) h[i] = -1;
  }
}

}  // namespace

std::vector<NameMap> enumerate_alg_homs(const FinAlgebra& a,
                                        const FinAlgebra& b, long bound) {
  if (bound <= 0) bound = enum_bound_default();
  std::vector<NameMap> out;
  if (a.functor == idsucc_functor() && b.functor == idsucc_functor()) {
    SuccAlgebra sa = SuccAlgebra::from_fin(a);
    SuccAlgebra sb = SuccAlgebra::from_fin(b);
    std::vector<int> h(sa.size(), -1);
    h[sa.zero] = sb.zero;
    // chase the chain from zero before branching
    std::vector<NameMap> homs;
    int cur = sa.succ[sa.zero], val = sb.succ[sb.zero];
    bool consistent = true;
    while (h[cur] < 0) {
      h[cur] = val;
      cur = sa.succ[cur];
      val = sb.succ[val];
    }
    consistent = h[cur] == val;
    if (consistent) hom_rec_idsucc(sa, sb, 0, h, homs);
    out = std::move(homs);
  } else {
    check_power_bound(b.carrier.size(), a.carrier.size(), bound,
                      "homomorphism enumeration");
    for (const auto& tup : all_tuples(b.carrier, a.carrier.size())) {
      NameMap h;
      for (std::size_t i = 0; i < a.carrier.size(); ++i)
        h[a.carrier.name(i)] = tup[i];
      if (check_alg_hom(a, b, h).ok) out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mlab
