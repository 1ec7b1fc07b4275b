#include "mlab/initiality.hpp"

#include <algorithm>

namespace mlab {

namespace {

std::vector<std::vector<int>> perms_fixing_zero(int n) {
  std::vector<int> rest;
  for (int i = 1; i < n; ++i) rest.push_back(i);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> p(n);
    p[0] = 0;
    for (int i = 1; i < n; ++i) p[i] = rest[i - 1];
    out.push_back(p);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace

std::vector<SuccAlgebra> all_algebras_upto_iso(int max_size) {
  std::vector<SuccAlgebra> out;
  for (int n = 1; n <= max_size; ++n) {
    FinSet carrier = canonical_set("e", n);
    std::vector<std::vector<int>> perms = perms_fixing_zero(n);
    std::vector<int> t(n, 0);
    while (true) {
      bool minimal = true;
      for (const auto& p : perms) {
        std::vector<int> inv(n);
        for (int i = 0; i < n; ++i) inv[p[i]] = i;
        std::vector<int> conj(n);
        for (int i = 0; i < n; ++i) conj[i] = p[t[inv[i]]];
        if (conj < t) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        SuccAlgebra a;
        a.carrier = carrier;
        a.zero = 0;
        a.succ = t;
        out.push_back(std::move(a));
      }
      // next table
      int i = n - 1;
      while (i >= 0 && t[i] == n - 1) t[i--] = 0;
      if (i < 0) break;
      ++t[i];
    }
  }
  return out;
}

CInitialReport is_C_initial_bounded(const SuccAlgebra& a,
                                    const SuccCoalgebra& c,
                                    const std::vector<SuccAlgebra>& family) {
  if (family.empty()) throw precondition_failed("family must be nonempty");
  CInitialReport r;
  bool skipped = false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    long count;
    try {
      EnumOptions opts;
      opts.max_count = 2;  // 0, 1 and "at least 2" are distinguishable
      count = static_cast<long>(
          enumerate_measurings(c, a, family[i], opts).items.size());
    } catch (const bound_exceeded&) {
      count = -1;
      skipped = true;
    }
    r.counts.push_back(count);
    if (count == 0 || count >= 2) {
      r.verdict = CInitialReport::Verdict::Refuted;
      if (r.witness < 0) r.witness = static_cast<int>(i);
    }
  }
  if (r.verdict != CInitialReport::Verdict::Refuted)
    r.verdict = skipped ? CInitialReport::Verdict::Inconclusive
                        : CInitialReport::Verdict::OnFamily;
  return r;
}

TerminalSearchResult terminal_C_initial_bounded(const SuccCoalgebra& c,
                                                int size_bound) {
  std::vector<SuccAlgebra> family = all_algebras_upto_iso(size_bound);
  TerminalSearchResult res;
  for (std::size_t i = 0; i < family.size(); ++i) {
    CInitialReport r = is_C_initial_bounded(family[i], c, family);
    if (r.verdict == CInitialReport::Verdict::OnFamily)
      res.candidates.push_back(static_cast<int>(i));
  }
  if (res.candidates.empty()) {
    res.note = "no C-initial algebra within the size bound";
    return res;
  }
  for (int ti : res.candidates) {
    bool terminal = true;
    for (int ai : res.candidates) {
      if (enumerate_alg_homs(family[ai].to_fin(), family[ti].to_fin()).size() !=
          1) {
        terminal = false;
        break;
      }
    }
    if (terminal) {
      res.found = true;
      res.algebra = family[ti];
      res.note = "terminal among " + std::to_string(res.candidates.size()) +
                 " candidates within the size bound";
      return res;
    }
  }
  res.note = "candidates exist but none is terminal within the size bound";
  return res;
}

NameMap unique_map_to_dual(const SuccAlgebra& a, const SuccCoalgebra& c) {
  // precondition: every element is zero or a successor
  std::vector<bool> covered(a.size(), false);
  covered[a.zero] = true;
  for (int i = 0; i < a.size(); ++i) covered[a.succ[i]] = true;
  for (int i = 0; i < a.size(); ++i)
    if (!covered[i])
      throw precondition_failed("element " + a.name(i) +
                                " is neither zero nor a successor");

  LazyAlgebra dual = convolution_lazy(c);
  SaturationResult sat = lazy_saturation(dual, c.size() + 3);
  if (!sat.saturated)
    throw precondition_failed(
        "[C,N] does not saturate (C has a state of infinite index), so no "
        "homomorphism from a finite algebra exists");
  // saturated [C,N] always closes with a fixed point
  const std::string top = sat.chain[sat.prefix];

  NameMap h;
  // the canonical chain from zero
  {
    int cur = a.zero;
    std::string val = dual.zero();
    while (true) {
      auto it = h.find(a.name(cur));
      if (it != h.end()) {
        if (it->second != val)
          throw precondition_failed(
              "no homomorphism to the dual exists: element " + a.name(cur) +
              " would need both " + it->second + " and " + val);
        break;
      }
      h[a.name(cur)] = val;
      cur = a.succ[cur];
      val = dual.succ(val);
    }
  }
  // everything else sits on or after a successor cycle: top element
  for (int i = 0; i < a.size(); ++i)
    if (!h.count(a.name(i))) h[a.name(i)] = top;
  // verify the homomorphism property
  for (int i = 0; i < a.size(); ++i)
    if (h.at(a.name(a.succ[i])) != dual.succ(h.at(a.name(i))))
      throw precondition_failed("no homomorphism to the dual exists: fails at " +
                                a.name(i));

  // uniqueness oracle: enumerate homs into the saturated reachable part
  std::vector<std::string> chain_names(sat.chain.begin(),
                                       sat.chain.begin() + sat.prefix + 1);
  SuccAlgebra reach;
  reach.carrier = FinSet(chain_names);
  reach.zero = reach.carrier.at(sat.chain[0]);
  reach.succ.resize(reach.size());
  for (int i = 0; i <= sat.prefix; ++i) {
    const std::string& next = i < sat.prefix ? sat.chain[i + 1] : top;
    reach.succ[reach.carrier.at(sat.chain[i])] = reach.carrier.at(next);
  }
  std::vector<NameMap> homs = enumerate_alg_homs(a.to_fin(), reach.to_fin());
  if (homs.size() != 1 || homs[0] != h)
    throw mlab_error("uniqueness oracle disagrees with the constructed map");
  return h;
}

}  // namespace mlab
