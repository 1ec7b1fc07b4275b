#include "mlab/universal.hpp"

#include <algorithm>
#include <functional>

namespace mlab {

// ---------------------------------------------------------------------------
// Measuring graph.

MeasuringGraph measuring_graph(const SuccAlgebra& a, const SuccAlgebra& b,
                               long bound) {
  if (bound <= 0) bound = enum_bound_default();
  double est = 1;
  for (std::size_t i = 1; i < a.carrier.size(); ++i) est *= b.carrier.size();
  if (est > static_cast<double>(bound))
    throw bound_exceeded("measuring graph refused: about " +
                         std::to_string(est) + " nodes exceeds bound " +
                         std::to_string(bound));
  MeasuringGraph g;
  g.a_carrier = a.carrier;
  g.b_carrier = b.carrier;
  std::vector<int> free_pos;
  for (int i = 0; i < a.size(); ++i)
    if (i != a.zero) free_pos.push_back(i);
  std::vector<std::vector<int>> raw;
  for (const auto& tup : all_tuples(b.carrier, free_pos.size())) {
    std::vector<int> f(a.size());
    f[a.zero] = b.zero;
    for (std::size_t k = 0; k < free_pos.size(); ++k)
      f[free_pos[k]] = b.carrier.at(tup[k]);
    raw.push_back(std::move(f));
  }
  std::vector<NameMap> named;
  for (const auto& f : raw) {
    NameMap m;
    for (int i = 0; i < a.size(); ++i) m[a.name(i)] = b.name(f[i]);
    named.push_back(std::move(m));
  }
  std::vector<std::size_t> order(named.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return named[x] < named[y]; });
  std::vector<std::vector<int>> nodes;
  for (std::size_t i : order) {
    g.nodes.push_back(named[i]);
    nodes.push_back(raw[i]);
  }
  for (const auto& f : nodes) {
    bool term = true;
    for (int i = 0; i < a.size() && term; ++i)
      if (f[a.succ[i]] != b.zero) term = false;
    g.terminal.push_back(term);
  }
  for (std::size_t x = 0; x < nodes.size(); ++x)
    for (std::size_t y = 0; y < nodes.size(); ++y) {
      bool e = true;
      for (int i = 0; i < a.size() && e; ++i)
        if (nodes[x][a.succ[i]] != b.succ[nodes[y][i]]) e = false;
      if (e) g.edges.insert({static_cast<int>(x), static_cast<int>(y)});
    }
  return g;
}

std::string MeasuringGraph::to_dot() const {
  std::string out = "digraph measuring {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<std::string> vals;
    for (const auto& an : a_carrier.names()) vals.push_back(nodes[i].at(an));
    out += "  n" + std::to_string(i) + " [label=\"" + func_name(vals) + "\"";
    if (terminal[i]) out += ", peripheries=2";
    out += "];\n";
  }
  for (const auto& [x, y] : edges)
    out += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";
  out += "}\n";
  return out;
}

std::vector<std::vector<int>> enumerate_labelings(const MeasuringGraph& g,
                                                  const SuccCoalgebra& c) {
  std::vector<std::vector<int>> out;
  std::vector<int> order(c.size());
  for (int i = 0; i < c.size(); ++i) order[i] = i;
  std::vector<Index> idx = all_indices(c);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    if (idx[x].infinite != idx[y].infinite) return !idx[x].infinite;
    if (!idx[x].infinite && idx[x].value != idx[y].value)
      return idx[x].value < idx[y].value;
    return x < y;
  });
  std::vector<int> lab(c.size(), -1);
  std::function<void(int)> rec = [&](int k) {
    if (k == c.size()) {
      out.push_back(lab);
      return;
    }
    int s = order[k];
    for (std::size_t n = 0; n < g.nodes.size(); ++n) {
      int ni = static_cast<int>(n);
      if (c.step[s] < 0) {
        if (!g.terminal[n]) continue;
      } else if (lab[c.step[s]] >= 0) {
        if (!g.edges.count({ni, lab[c.step[s]]})) continue;
      }
      bool ok = true;
      for (int u = 0; u < c.size() && ok; ++u)
        if (c.step[u] == s && lab[u] >= 0 && u != s &&
            !g.edges.count({lab[u], ni}))
          ok = false;
      if (c.step[s] == s && !g.edges.count({ni, ni})) ok = false;
      if (!ok) continue;
      lab[s] = ni;
      rec(k + 1);
      lab[s] = -1;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Classification.

SubterminalName classify_universal(const SuccAlgebra& a, const SuccAlgebra& b) {
  if (!is_N_generated(a))
    throw precondition_failed(
        "classification requires the canonical map from N to be surjective");
  PartialInductionOutcome r = partial_induction(a, b);
  if (r.total) return SubterminalName::ninfinity();
  bool hom = !enumerate_alg_homs(a.to_fin(), b.to_fin()).empty();
  return hom ? SubterminalName::bracket_with_point(r.partial_at)
             : SubterminalName::bracket(r.partial_at);
}

SubterminalName dual_coalgebra_classified(const SuccAlgebra& a) {
  if (!is_N_generated(a))
    throw precondition_failed(
        "classification requires the canonical map from N to be surjective");
  try {
    PartialInductionOutcome r = partial_induction_lazy(a, nat_lazy(), a.size() + 2);
    // total over N would need an injective chain, impossible on a finite
    // carrier, but the branch is kept for honesty
    if (r.total) return SubterminalName::ninfinity();
    return SubterminalName::bracket(r.partial_at);
  } catch (const bound_exceeded&) {
    // every finite stage succeeded and no stabilization: the N^- shape
    return SubterminalName::nminus();
  }
}

LazyAlgebra dual_algebra(const SuccCoalgebra& c) { return convolution_lazy(c); }

// ---------------------------------------------------------------------------
// Measuring tensor.

namespace {

struct TensorBuilder {
  PresentedAlgebra p;

  int find(int t) {
    while (p.uf[t] != t) {
      p.uf[t] = p.uf[p.uf[t]];
      t = p.uf[t];
    }
    return t;
  }

  int new_term(std::string label, int parent) {
    p.term_label.push_back(std::move(label));
    p.term_parent.push_back(parent);
    p.uf.push_back(static_cast<int>(p.uf.size()));
    p.succ_of.push_back(-1);
    return static_cast<int>(p.uf.size()) - 1;
  }

  int ensure_succ(int t) {
    int r = find(t);
    if (p.succ_of[r] < 0)
      p.succ_of[r] = new_term("S(" + p.term_label[r] + ")", r);
    return p.succ_of[r];
  }

  void unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return;
    // keep the older term as root so class names stay well-founded
    if (ry < rx) std::swap(rx, ry);
    int sx = p.succ_of[rx], sy = p.succ_of[ry];
    p.uf[ry] = rx;
    if (sx < 0) {
      p.succ_of[rx] = sy;
    } else if (sy >= 0) {
      unite(sx, sy);  // successor congruence
    }
  }
};

}  // namespace

PresentedAlgebra measuring_tensor(const SuccCoalgebra& c, const SuccAlgebra& a) {
  TensorBuilder tb;
  tb.new_term("z", -1);
  std::vector<std::vector<int>> gen(c.size(), std::vector<int>(a.size()));
  for (int ci = 0; ci < c.size(); ++ci)
    for (int ai = 0; ai < a.size(); ++ai)
      gen[ci][ai] = tb.new_term("(" + c.name(ci) + "," + a.name(ai) + ")", -1);
  for (int ci = 0; ci < c.size(); ++ci) {
    tb.unite(gen[ci][a.zero], 0);
    for (int b = 0; b < a.size(); ++b) {
      int target = gen[ci][a.succ[b]];
      if (c.step[ci] < 0)
        tb.unite(target, 0);
      else
        tb.unite(target, tb.ensure_succ(gen[c.step[ci]][b]));
    }
  }
  // final path compression
  for (std::size_t t = 0; t < tb.p.uf.size(); ++t) tb.find(static_cast<int>(t));
  return tb.p;
}

int PresentedAlgebra::find(int t) const {
  while (uf[t] != t) t = uf[t];
  return t;
}

namespace {

// Minimal-creation-index member of each class, for well-founded naming.
std::vector<int> min_member(const PresentedAlgebra& p) {
  std::vector<int> m(p.uf.size(), -1);
  for (int t = 0; t < static_cast<int>(p.uf.size()); ++t) {
    int r = p.find(t);
    if (m[r] < 0 || t < m[r]) m[r] = t;
  }
  return m;
}

}  // namespace

std::string PresentedAlgebra::class_name(int rep) const {
  std::vector<int> m = min_member(*this);
  std::function<std::string(int)> name = [&](int r) -> std::string {
    int t = m[r];
    if (term_parent[t] < 0) return term_label[t];
    return "S(" + name(find(term_parent[t])) + ")";
  };
  return name(find(rep));
}

std::vector<int> PresentedAlgebra::class_reps() const {
  std::vector<int> reps;
  for (int t = 0; t < static_cast<int>(uf.size()); ++t)
    if (find(t) == t) reps.push_back(t);
  std::sort(reps.begin(), reps.end(), [&](int x, int y) {
    return class_name(x) < class_name(y);
  });
  return reps;
}

LazyAlgebra PresentedAlgebra::as_lazy() const {
  auto shared = std::make_shared<PresentedAlgebra>(*this);
  auto by_name = std::make_shared<std::map<std::string, int>>();
  for (int r : class_reps()) (*by_name)[class_name(r)] = r;
  LazyAlgebra l;
  l.zero = [shared] { return shared->class_name(shared->find(0)); };
  l.succ = [shared, by_name](const std::string& n) -> std::string {
    auto it = by_name->find(n);
    if (it == by_name->end()) return "S(" + n + ")";  // free tail
    int r = shared->find(it->second);
    if (shared->succ_of[r] < 0) return "S(" + n + ")";
    return shared->class_name(shared->find(shared->succ_of[r]));
  };
  l.description = "C |> A";
  return l;
}

long PresentedAlgebra::count_homs_into(const SuccAlgebra& b, long cap) const {
  std::vector<int> reps = class_reps();
  std::map<int, int> pos;
  for (std::size_t i = 0; i < reps.size(); ++i) pos[reps[i]] = static_cast<int>(i);
  int zclass = pos.at(find(0));
  // succ constraint between class positions, -1 when free
  std::vector<int> snext(reps.size(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (succ_of[reps[i]] >= 0) snext[i] = pos.at(find(succ_of[reps[i]]));
  long count = 0;
  std::vector<int> val(reps.size(), -1);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == reps.size()) {
      ++count;
      return cap > 0 && count >= cap;
    }
    for (int v = 0; v < b.size(); ++v) {
      if (static_cast<int>(k) == zclass && v != b.zero) continue;
      bool ok = true;
      if (snext[k] >= 0 && val[snext[k]] >= 0 && val[snext[k]] != b.succ[v])
        ok = false;
      if (snext[k] == static_cast<int>(k) && b.succ[v] != v) ok = false;
      for (std::size_t u = 0; u < reps.size() && ok; ++u)
        if (snext[u] == static_cast<int>(k) && u != k && val[u] >= 0 &&
            b.succ[val[u]] != v)
          ok = false;
      if (!ok) continue;
      val[k] = v;
      if (rec(k + 1)) return true;
      val[k] = -1;
    }
    return false;
  };
  rec(0);
  return count;
}

}  // namespace mlab
