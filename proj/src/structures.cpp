#include "mlab/structures.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mlab {

// ---------------------------------------------------------------------------
// Generic finite (co)algebras.

void FinAlgebra::validate() const {
  FinSet dom = eval_on_set(functor, carrier);
  for (const auto& n : dom.names()) {
    auto it = alpha.find(n);
    if (it == alpha.end())
      throw validation_error("algebra map undefined on " + n);
    if (!carrier.contains(it->second))
      throw validation_error("algebra map image " + it->second +
                             " is not a carrier element");
  }
  if (alpha.size() != dom.size())
    throw validation_error("algebra map has extra entries");
}

void FinCoalgebra::validate() const {
  FinSet cod = eval_on_set(functor, carrier);
  for (const auto& n : carrier.names()) {
    auto it = chi.find(n);
    if (it == chi.end())
      throw validation_error("coalgebra map undefined on " + n);
    if (!cod.contains(it->second))
      throw validation_error("coalgebra map image " + it->second +
                             " is not in F(carrier)");
  }
  if (chi.size() != carrier.size())
    throw validation_error("coalgebra map has extra entries");
}

FinCoalgebra product_coalgebra(const FinCoalgebra& c, const FinCoalgebra& d) {
  if (!(c.functor == d.functor))
    throw precondition_failed("product requires coalgebras of the same functor");
  FinCoalgebra p;
  p.functor = c.functor;
  p.carrier = product_set(c.carrier, d.carrier);
  PairMap nab = nabla(c.functor, c.carrier, d.carrier);
  for (const auto& x : c.carrier.names())
    for (const auto& y : d.carrier.names())
      p.chi[pair_name(x, y)] = nab.at({c.chi.at(x), d.chi.at(y)});
  return p;
}

FinCoalgebra unit_coalgebra(const FunctorExpr& f) {
  FinCoalgebra u;
  u.functor = f;
  u.carrier = unit_set();
  u.chi["*"] = eta(f);
  return u;
}

bool is_coalgebra_iso(const FinCoalgebra& c, const FinCoalgebra& d,
                      const NameMap& m) {
  if (c.carrier.size() != d.carrier.size()) return false;
  std::set<std::string> images;
  for (const auto& n : c.carrier.names()) {
    auto it = m.find(n);
    if (it == m.end() || !d.carrier.contains(it->second)) return false;
    images.insert(it->second);
  }
  if (images.size() != d.carrier.size()) return false;
  NameMap fm = eval_on_map(c.functor, c.carrier, m);
  for (const auto& n : c.carrier.names())
    if (fm.at(c.chi.at(n)) != d.chi.at(m.at(n))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Id+1 views.

namespace {

// "inl(x)" -> x, "inr(*)" -> nullopt. Tags are produced by eval_on_set, so
// fixed-prefix slicing is safe here and nowhere else.
std::optional<std::string> decode_idsucc(const std::string& v) {
  if (v == "inr(*)") return std::nullopt;
  if (v.size() >= 6 && v.compare(0, 4, "inl(") == 0 && v.back() == ')')
    return v.substr(4, v.size() - 5);
  throw validation_error("not an id+1 value: " + v);
}

}  // namespace

FinAlgebra SuccAlgebra::to_fin() const {
  FinAlgebra a;
  a.functor = idsucc_functor();
  a.carrier = carrier;
  a.alpha["inr(*)"] = name(zero);
  for (int i = 0; i < size(); ++i) a.alpha["inl(" + name(i) + ")"] = name(succ[i]);
  return a;
}

SuccAlgebra SuccAlgebra::from_fin(const FinAlgebra& a) {
  if (!(a.functor == idsucc_functor()))
    throw precondition_failed("not an id+1 algebra");
  a.validate();
  SuccAlgebra r;
  r.carrier = a.carrier;
  r.zero = a.carrier.at(a.alpha.at("inr(*)"));
  r.succ.resize(a.carrier.size());
  for (std::size_t i = 0; i < a.carrier.size(); ++i)
    r.succ[i] = a.carrier.at(a.alpha.at("inl(" + a.carrier.name(i) + ")"));
  return r;
}

void SuccAlgebra::validate() const {
  if (carrier.empty()) throw validation_error("algebra carrier is empty");
  if (zero < 0 || zero >= size()) throw validation_error("zero out of range");
  if (static_cast<int>(succ.size()) != size())
    throw validation_error("succ is not total");
  for (int s : succ)
    if (s < 0 || s >= size()) throw validation_error("succ image out of range");
}

FinCoalgebra SuccCoalgebra::to_fin() const {
  FinCoalgebra c;
  c.functor = idsucc_functor();
  c.carrier = carrier;
  for (int i = 0; i < size(); ++i)
    c.chi[name(i)] = step[i] < 0 ? "inr(*)" : "inl(" + name(step[i]) + ")";
  return c;
}

SuccCoalgebra SuccCoalgebra::from_fin(const FinCoalgebra& c) {
  if (!(c.functor == idsucc_functor()))
    throw precondition_failed("not an id+1 coalgebra");
  c.validate();
  SuccCoalgebra r;
  r.carrier = c.carrier;
  r.step.resize(c.carrier.size());
  for (std::size_t i = 0; i < c.carrier.size(); ++i) {
    auto v = decode_idsucc(c.chi.at(c.carrier.name(i)));
    r.step[i] = v ? c.carrier.at(*v) : -1;
  }
  return r;
}

void SuccCoalgebra::validate() const {
  if (static_cast<int>(step.size()) != size())
    throw validation_error("step is not total");
  for (int s : step)
    if (s < -1 || s >= size()) throw validation_error("step image out of range");
}

Index index_of(const SuccCoalgebra& c, int state) {
  if (state < 0 || state >= c.size())
    throw precondition_failed("state out of range");
  long steps = 0;
  int cur = state;
  std::vector<bool> seen(c.size(), false);
  while (true) {
    if (c.step[cur] < 0) return Index::fin(steps);
    if (seen[cur]) return Index::inf();
    seen[cur] = true;
    cur = c.step[cur];
    ++steps;
  }
}

std::vector<Index> all_indices(const SuccCoalgebra& c) {
  std::vector<Index> r;
  r.reserve(c.size());
  for (int i = 0; i < c.size(); ++i) r.push_back(index_of(c, i));
  return r;
}

namespace {

// Zero-padded numerals so carrier order matches numeric order.
std::vector<std::string> numerals(int n) {
  int width = std::to_string(n).size();
  std::vector<std::string> names;
  for (int k = 0; k <= n; ++k) {
    std::string s = std::to_string(k);
    names.push_back(std::string(width - s.size(), '0') + s);
  }
  return names;
}

}  // namespace

SuccAlgebra std_algebra(int n) {
  if (n < 0) throw precondition_failed("n must be nonnegative");
  SuccAlgebra a;
  a.carrier = FinSet(numerals(n));
  a.zero = 0;
  for (int k = 0; k <= n; ++k) a.succ.push_back(std::min(k + 1, n));
  return a;
}

SuccCoalgebra std_coalgebra(int n) {
  if (n < 0) throw precondition_failed("n must be nonnegative");
  SuccCoalgebra c;
  c.carrier = FinSet(numerals(n));
  for (int k = 0; k <= n; ++k) c.step.push_back(k - 1);
  return c;
}

SuccCoalgebra point_coalgebra() {
  SuccCoalgebra c;
  c.carrier = FinSet({"inf"});
  c.step = {0};
  return c;
}

SuccCoalgebra empty_coalgebra() { return SuccCoalgebra{}; }

SuccCoalgebra succ_product(const SuccCoalgebra& c, const SuccCoalgebra& d) {
  return SuccCoalgebra::from_fin(product_coalgebra(c.to_fin(), d.to_fin()));
}

Lasso canonical_from_initial(const SuccAlgebra& a) {
  Lasso l;
  std::vector<int> first_seen(a.size(), -1);
  int cur = a.zero;
  while (first_seen[cur] < 0) {
    first_seen[cur] = static_cast<int>(l.chain.size());
    l.chain.push_back(cur);
    cur = a.succ[cur];
  }
  l.prefix = first_seen[cur];
  l.cycle = static_cast<int>(l.chain.size()) - l.prefix;
  return l;
}

bool is_N_generated(const SuccAlgebra& a) {
  Lasso l = canonical_from_initial(a);
  return static_cast<int>(l.chain.size()) == a.size();
}

SubcoalgebraListing subcoalgebras(const SuccCoalgebra& c, int bound) {
  if (c.size() > bound)
    throw bound_exceeded("subcoalgebra listing refused: " +
                         std::to_string(c.size()) + " states exceeds bound " +
                         std::to_string(bound));
  SubcoalgebraListing out;
  int n = c.size();
  std::vector<unsigned> masks;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (int i = 0; i < n && closed; ++i)
      if ((mask >> i & 1u) && c.step[i] >= 0 && !(mask >> c.step[i] & 1u))
        closed = false;
    if (closed) masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (unsigned mask : masks) {
    std::vector<int> subset;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) {
        subset.push_back(i);
        names.push_back(c.name(i));
      }
    SuccCoalgebra sub;
    sub.carrier = FinSet(names);
    for (int i : subset)
      sub.step.push_back(c.step[i] < 0 ? -1 : sub.carrier.at(c.name(c.step[i])));
    out.subsets.push_back(std::move(subset));
    out.coalgebras.push_back(std::move(sub));
  }
  return out;
}

namespace {

// Enumerate set partitions via restricted growth strings.
void partitions_rec(int i, int n, int max_block, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  for (int b = 0; b <= max_block + 1; ++b) {
    cur[i] = b;
    partitions_rec(i + 1, n, std::max(max_block, b), cur, out);
  }
}

}  // namespace

QuotientListing quotient_algebras(const SuccAlgebra& a, int bound) {
  if (a.size() > bound)
    throw bound_exceeded("quotient listing refused: " + std::to_string(a.size()) +
                         " elements exceeds bound " + std::to_string(bound));
  QuotientListing out;
  int n = a.size();
  std::vector<std::vector<int>> parts;
  std::vector<int> cur(n, 0);
  if (n > 0) {
    cur[0] = 0;
    partitions_rec(1, n, 0, cur, parts);
  }
  for (const auto& block_of : parts) {
    int nblocks = *std::max_element(block_of.begin(), block_of.end()) + 1;
    // succ descends iff related elements have related successors
    std::vector<int> succ_block(nblocks, -1);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int b = block_of[i], sb = block_of[a.succ[i]];
      if (succ_block[b] < 0)
        succ_block[b] = sb;
      else if (succ_block[b] != sb)
        ok = false;
    }
    if (!ok) continue;
    std::vector<std::string> block_names(nblocks);
    for (int b = 0; b < nblocks; ++b) {
      std::string s = "{";
      bool first = true;
      for (int i = 0; i < n; ++i)
        if (block_of[i] == b) {
          if (!first) s += ",";
          s += a.name(i);
          first = false;
        }
      block_names[b] = s + "}";
    }
    SuccAlgebra q;
    q.carrier = FinSet(block_names);
    q.zero = q.carrier.at(block_names[block_of[a.zero]]);
    q.succ.resize(nblocks);
    for (int b = 0; b < nblocks; ++b)
      q.succ[q.carrier.at(block_names[b])] =
          q.carrier.at(block_names[succ_block[b]]);
    out.block_of.push_back(block_of);
    out.algebras.push_back(std::move(q));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lazy algebras.

SaturationResult lazy_saturation(const LazyAlgebra& l, int bound) {
  if (bound < 1) throw precondition_failed("bound must be at least 1");
  SaturationResult r;
  std::map<std::string, int> first_seen;
  std::string cur = l.zero();
  for (int i = 0; i < bound; ++i) {
    auto it = first_seen.find(cur);
    if (it != first_seen.end()) {
      r.saturated = true;
      r.prefix = it->second;
      r.cycle = static_cast<int>(r.chain.size()) - it->second;
      return r;
    }
    first_seen[cur] = i;
    r.chain.push_back(cur);
    cur = l.succ(cur);
  }
  return r;
}

LazyAlgebra nat_lazy() {
  LazyAlgebra l;
  l.zero = [] { return std::string("0"); };
  l.succ = [](const std::string& n) { return std::to_string(std::stol(n) + 1); };
  l.description = "N";
  return l;
}

LazyAlgebra lazy_of(const SuccAlgebra& a) {
  auto shared = std::make_shared<SuccAlgebra>(a);
  LazyAlgebra l;
  l.zero = [shared] { return shared->name(shared->zero); };
  l.succ = [shared](const std::string& n) {
    return shared->name(shared->succ[shared->carrier.at(n)]);
  };
  l.description = "finite algebra";
  return l;
}

std::string SubterminalName::str() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::Bracket:
      return "<" + std::to_string(n) + ">^" + (with_point ? "+I" : "");
    case Kind::NMinus: return "N^-";
    case Kind::IPoint: return "I";
    case Kind::NInfinity: return "N^inf";
  }
  return "?";
}

long SubterminalName::finite_upto() const {
  switch (kind) {
    case Kind::Empty:
    case Kind::IPoint: return -1;
    case Kind::Bracket: return n;
    case Kind::NMinus:
    case Kind::NInfinity: return -2;
  }
  return -1;
}

bool SubterminalName::has_point() const {
  return kind == Kind::IPoint || kind == Kind::NInfinity ||
         (kind == Kind::Bracket && with_point);
}

bool SubterminalName::embeds_in(const SubterminalName& o) const {
  if (has_point() && !o.has_point()) return false;
  long f = finite_upto(), g = o.finite_upto();
  if (g == -2) return true;
  return f != -2 && f <= g;
}

}  // namespace mlab
