#include "mlab/functor.hpp"

#include <algorithm>
#include <sstream>

namespace mlab {

Monoid::Monoid(FinSet carrier_, std::string unit_,
               std::map<std::pair<std::string, std::string>, std::string> op_,
               std::string name_)
    : carrier(std::move(carrier_)),
      unit(std::move(unit_)),
      op(std::move(op_)),
      name(std::move(name_)) {
  if (!carrier.contains(unit)) throw validation_error("monoid unit not in carrier");
  for (const auto& a : carrier.names())
    for (const auto& b : carrier.names()) {
      auto it = op.find({a, b});
      if (it == op.end()) throw validation_error("monoid operation not total at (" + a + "," + b + ")");
      if (!carrier.contains(it->second))
        throw validation_error("monoid operation leaves the carrier at (" + a + "," + b + ")");
    }
  for (const auto& a : carrier.names()) {
    if (apply(unit, a) != a || apply(a, unit) != a)
      throw validation_error("monoid not unital at " + a);
    for (const auto& b : carrier.names()) {
      if (apply(a, b) != apply(b, a))
        throw validation_error("monoid not commutative at (" + a + "," + b + ")");
      for (const auto& c : carrier.names())
        if (apply(apply(a, b), c) != apply(a, apply(b, c)))
          throw validation_error("monoid not associative at (" + a + "," + b + "," + c + ")");
    }
  }
}

Monoid trivial_monoid() {
  return Monoid(unit_set(), "*", {{{"*", "*"}, "*"}}, "unit");
}

Monoid bool_monoid(const std::string& opname) {
  FinSet b(std::vector<std::string>{"ff", "tt"});
  std::map<std::pair<std::string, std::string>, std::string> op;
  auto set = [&](const char* x, const char* y, const char* r) { op[{x, y}] = r; };
  std::string unit;
  if (opname == "and") {
    set("ff", "ff", "ff"); set("ff", "tt", "ff"); set("tt", "ff", "ff"); set("tt", "tt", "tt");
    unit = "tt";
  } else if (opname == "or") {
    set("ff", "ff", "ff"); set("ff", "tt", "tt"); set("tt", "ff", "tt"); set("tt", "tt", "tt");
    unit = "ff";
  } else if (opname == "xor") {
    set("ff", "ff", "ff"); set("ff", "tt", "tt"); set("tt", "ff", "tt"); set("tt", "tt", "ff");
    unit = "ff";
  } else {
    throw validation_error("unknown bool monoid operation: " + opname);
  }
  return Monoid(std::move(b), unit, std::move(op), "bool " + opname);
}

FunctorExpr FunctorExpr::id() {
  FunctorExpr f;
  f.kind_ = Kind::Id;
  return f;
}

FunctorExpr FunctorExpr::constant(Monoid m) {
  FunctorExpr f;
  f.kind_ = Kind::Const;
  f.monoid_ = std::make_shared<Monoid>(std::move(m));
  return f;
}

FunctorExpr FunctorExpr::prod(FunctorExpr l, FunctorExpr r) {
  FunctorExpr f;
  f.kind_ = Kind::Prod;
  f.left_ = std::make_shared<FunctorExpr>(std::move(l));
  f.right_ = std::make_shared<FunctorExpr>(std::move(r));
  return f;
}

FunctorExpr FunctorExpr::sum(FunctorExpr l, Monoid r) {
  FunctorExpr f;
  f.kind_ = Kind::Sum;
  f.left_ = std::make_shared<FunctorExpr>(std::move(l));
  f.monoid_ = std::make_shared<Monoid>(std::move(r));
  return f;
}

FunctorExpr FunctorExpr::comp(FunctorExpr outer, FunctorExpr inner) {
  FunctorExpr f;
  f.kind_ = Kind::Comp;
  f.left_ = std::make_shared<FunctorExpr>(std::move(outer));
  f.right_ = std::make_shared<FunctorExpr>(std::move(inner));
  return f;
}

FunctorExpr FunctorExpr::exp(FinSet base) {
  FunctorExpr f;
  f.kind_ = Kind::Exp;
  f.base_ = std::move(base);
  return f;
}

std::string FunctorExpr::to_string() const {
  switch (kind_) {
    case Kind::Id:
      return "id";
    case Kind::Const: {
      if (monoid_->name == "unit") return "(const unit)";
      return "(const " + monoid_->name + ")";
    }
    case Kind::Prod:
      return "(prod " + left_->to_string() + " " + right_->to_string() + ")";
    case Kind::Sum: {
      std::string rhs = monoid_->name == "unit" ? "(const unit)" : "(const " + monoid_->name + ")";
      if (left_->kind_ == Kind::Id && monoid_->name == "unit") return "idsucc";
      return "(sum " + left_->to_string() + " " + rhs + ")";
    }
    case Kind::Comp:
      return "(comp " + left_->to_string() + " " + right_->to_string() + ")";
    case Kind::Exp: {
      std::string s = "(exp";
      for (const auto& n : base_.names()) s += " " + n;
      return s + ")";
    }
  }
  return "?";
}

const FunctorExpr& idsucc_functor() {
  static const FunctorExpr f = FunctorExpr::sum(FunctorExpr::id(), trivial_monoid());
  return f;
}

FunctorExpr automaton_functor(const FinSet& alphabet) {
  return FunctorExpr::prod(FunctorExpr::constant(bool_monoid("and")),
                           FunctorExpr::exp(alphabet));
}

FunctorExpr gf_functor(const FinSet& alphabet) {
  return FunctorExpr::comp(idsucc_functor(), automaton_functor(alphabet));
}

FinSet eval_on_set(const FunctorExpr& f, const FinSet& x) {
  switch (f.kind()) {
    case FunctorExpr::Kind::Id:
      return x;
    case FunctorExpr::Kind::Const:
      return f.monoid().carrier;
    case FunctorExpr::Kind::Prod:
      return product_set(eval_on_set(f.left(), x), eval_on_set(f.right(), x));
    case FunctorExpr::Kind::Sum: {
      std::vector<std::string> names;
      FinSet lx = eval_on_set(f.left(), x);
      for (const auto& n : lx.names()) names.push_back("inl(" + n + ")");
      for (const auto& n : f.monoid().carrier.names()) names.push_back("inr(" + n + ")");
      return FinSet(std::move(names));
    }
    case FunctorExpr::Kind::Comp:
      return eval_on_set(f.left(), eval_on_set(f.right(), x));
    case FunctorExpr::Kind::Exp: {
      std::vector<std::string> names;
      for (const auto& t : all_tuples(x, f.base().size())) names.push_back(func_name(t));
      return FinSet(std::move(names));
    }
  }
  return FinSet();
}

NameMap eval_on_map(const FunctorExpr& f, const FinSet& x, const NameMap& fn) {
  switch (f.kind()) {
    case FunctorExpr::Kind::Id:
      return fn;
    case FunctorExpr::Kind::Const:
      return identity_map(f.monoid().carrier);
    case FunctorExpr::Kind::Prod: {
      NameMap ml = eval_on_map(f.left(), x, fn);
      NameMap mr = eval_on_map(f.right(), x, fn);
      NameMap out;
      for (const auto& [lk, lv] : ml)
        for (const auto& [rk, rv] : mr) out[pair_name(lk, rk)] = pair_name(lv, rv);
      return out;
    }
    case FunctorExpr::Kind::Sum: {
      NameMap ml = eval_on_map(f.left(), x, fn);
      NameMap out;
      for (const auto& [k, v] : ml) out["inl(" + k + ")"] = "inl(" + v + ")";
      for (const auto& m : f.monoid().carrier.names()) out["inr(" + m + ")"] = "inr(" + m + ")";
      return out;
    }
    case FunctorExpr::Kind::Comp: {
      NameMap inner = eval_on_map(f.right(), x, fn);
      return eval_on_map(f.left(), eval_on_set(f.right(), x), inner);
    }
    case FunctorExpr::Kind::Exp: {
      NameMap out;
      for (const auto& t : all_tuples(x, f.base().size())) {
        std::vector<std::string> img(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) img[i] = fn.at(t[i]);
        out[func_name(t)] = func_name(img);
      }
      return out;
    }
  }
  return {};
}

PairMap nabla(const FunctorExpr& f, const FinSet& x, const FinSet& y) {
  switch (f.kind()) {
    case FunctorExpr::Kind::Id: {
      PairMap out;
      for (const auto& a : x.names())
        for (const auto& b : y.names()) out[{a, b}] = pair_name(a, b);
      return out;
    }
    case FunctorExpr::Kind::Const: {
      PairMap out;
      const Monoid& m = f.monoid();
      for (const auto& a : m.carrier.names())
        for (const auto& b : m.carrier.names()) out[{a, b}] = m.apply(a, b);
      return out;
    }
    case FunctorExpr::Kind::Prod: {
      PairMap nl = nabla(f.left(), x, y);
      PairMap nr = nabla(f.right(), x, y);
      FinSet lx = eval_on_set(f.left(), x), rx = eval_on_set(f.right(), x);
      FinSet ly = eval_on_set(f.left(), y), ry = eval_on_set(f.right(), y);
      PairMap out;
      for (const auto& a : lx.names())
        for (const auto& b : rx.names())
          for (const auto& c : ly.names())
            for (const auto& d : ry.names())
              out[{pair_name(a, b), pair_name(c, d)}] =
                  pair_name(nl.at({a, c}), nr.at({b, d}));
      return out;
    }
    case FunctorExpr::Kind::Sum: {
      // F + M with M a commutative monoid acting as a two-sided module via
      // the projections lambda, rho that discard the F factor.
      PairMap nl = nabla(f.left(), x, y);
      const Monoid& m = f.monoid();
      FinSet lx = eval_on_set(f.left(), x), ly = eval_on_set(f.left(), y);
      PairMap out;
      for (const auto& a : lx.names())
        for (const auto& b : ly.names())
          out[{"inl(" + a + ")", "inl(" + b + ")"}] = "inl(" + nl.at({a, b}) + ")";
      for (const auto& a : lx.names())
        for (const auto& n : m.carrier.names())
          out[{"inl(" + a + ")", "inr(" + n + ")"}] = "inr(" + n + ")";
      for (const auto& n : m.carrier.names())
        for (const auto& b : ly.names())
          out[{"inr(" + n + ")", "inl(" + b + ")"}] = "inr(" + n + ")";
      for (const auto& n : m.carrier.names())
        for (const auto& k : m.carrier.names())
          out[{"inr(" + n + ")", "inr(" + k + ")"}] = "inr(" + m.apply(n, k) + ")";
      return out;
    }
    case FunctorExpr::Kind::Comp: {
      // nabla_OI = O(nabla_I) . nabla_O at (I(X), I(Y)).
      const FunctorExpr& o = f.left();
      const FunctorExpr& i = f.right();
      FinSet ix = eval_on_set(i, x), iy = eval_on_set(i, y);
      PairMap no = nabla(o, ix, iy);
      PairMap ni = nabla(i, x, y);
      NameMap ni_map;
      for (const auto& p : ix.names())
        for (const auto& q : iy.names()) ni_map[pair_name(p, q)] = ni.at({p, q});
      NameMap lifted = eval_on_map(o, product_set(ix, iy), ni_map);
      PairMap out;
      for (auto& [k, v] : no) out[k] = lifted.at(v);
      return out;
    }
    case FunctorExpr::Kind::Exp: {
      std::size_t n = f.base().size();
      PairMap out;
      for (const auto& t : all_tuples(x, n))
        for (const auto& s : all_tuples(y, n)) {
          std::vector<std::string> img(n);
          for (std::size_t i = 0; i < n; ++i) img[i] = pair_name(t[i], s[i]);
          out[{func_name(t), func_name(s)}] = func_name(img);
        }
      return out;
    }
  }
  return {};
}

std::string eta(const FunctorExpr& f) {
  switch (f.kind()) {
    case FunctorExpr::Kind::Id:
      return "*";
    case FunctorExpr::Kind::Const:
      return f.monoid().unit;
    case FunctorExpr::Kind::Prod:
      return pair_name(eta(f.left()), eta(f.right()));
    case FunctorExpr::Kind::Sum:
      return "inl(" + eta(f.left()) + ")";
    case FunctorExpr::Kind::Comp: {
      // eta_O then O(eta_I), where eta_I is viewed as the map 1 -> I(1).
      NameMap unit_to_i1{{"*", eta(f.right())}};
      return eval_on_map(f.left(), unit_set(), unit_to_i1).at(eta(f.left()));
    }
    case FunctorExpr::Kind::Exp: {
      std::vector<std::string> img(f.base().size(), "*");
      return func_name(img);
    }
  }
  return "?";
}

namespace {

void maybe_corrupt(PairMap& n, const NablaCorruptor& c) {
  if (!c.enabled || n.size() < 2) return;
  auto it = n.begin();
  auto jt = std::next(it);
  std::swap(it->second, jt->second);
}

}  // namespace

LawReport check_lax_axioms(const FunctorExpr& f, std::size_t max_size,
                           const NablaCorruptor& corrupt) {
  LawRow assoc{"associative"}, unital{"unital"}, comm{"commutative"};
  for (std::size_t nx = 0; nx <= max_size; ++nx)
    for (std::size_t ny = 0; ny <= max_size; ++ny) {
      FinSet x = canonical_set("a", nx), y = canonical_set("b", ny);
      FinSet fx = eval_on_set(f, x), fy = eval_on_set(f, y);
      // Commutativity: F(tau) . nabla_{X,Y} == nabla_{Y,X} . swap.
      {
        PairMap nxy = nabla(f, x, y), nyx = nabla(f, y, x);
        maybe_corrupt(nxy, corrupt);
        NameMap tau;
        for (const auto& a : x.names())
          for (const auto& b : y.names()) tau[pair_name(a, b)] = pair_name(b, a);
        NameMap ftau = eval_on_map(f, product_set(x, y), tau);
        for (const auto& u : fx.names())
          for (const auto& v : fy.names()) {
            ++comm.instances;
            if (ftau.at(nxy.at({u, v})) != nyx.at({v, u}))
              comm.failures.push_back("X=" + std::to_string(nx) + ",Y=" +
                                      std::to_string(ny) + " at (" + u + "," + v + ")");
          }
      }
      // Unitality (left and right).
      {
        const FinSet& one = unit_set();
        std::string e = eta(f);
        PairMap nix = nabla(f, one, x), nxi = nabla(f, x, one);
        maybe_corrupt(nix, corrupt);
        NameMap lam, rho;
        for (const auto& a : x.names()) {
          lam[pair_name("*", a)] = a;
          rho[pair_name(a, "*")] = a;
        }
        NameMap flam = eval_on_map(f, product_set(one, x), lam);
        NameMap frho = eval_on_map(f, product_set(x, one), rho);
        for (const auto& u : fx.names()) {
          ++unital.instances;
          if (flam.at(nix.at({e, u})) != u)
            unital.failures.push_back("left unit X=" + std::to_string(nx) + " at " + u);
          ++unital.instances;
          if (frho.at(nxi.at({u, e})) != u)
            unital.failures.push_back("right unit X=" + std::to_string(nx) + " at " + u);
        }
      }
      for (std::size_t nz = 0; nz <= max_size; ++nz) {
        FinSet z = canonical_set("c", nz);
        FinSet fz = eval_on_set(f, z);
        FinSet xy = product_set(x, y), yz = product_set(y, z);
        PairMap n_xy = nabla(f, x, y);
        PairMap n_xy_z = nabla(f, xy, z);
        PairMap n_yz = nabla(f, y, z);
        PairMap n_x_yz = nabla(f, x, yz);
        maybe_corrupt(n_xy_z, corrupt);
        NameMap assoc_map;
        for (const auto& a : x.names())
          for (const auto& b : y.names())
            for (const auto& c : z.names())
              assoc_map[pair_name(pair_name(a, b), c)] = pair_name(a, pair_name(b, c));
        NameMap fassoc = eval_on_map(f, product_set(xy, z), assoc_map);
        for (const auto& u : fx.names())
          for (const auto& v : fy.names())
            for (const auto& w : fz.names()) {
              ++assoc.instances;
              std::string lhs = fassoc.at(n_xy_z.at({n_xy.at({u, v}), w}));
              std::string rhs = n_x_yz.at({u, n_yz.at({v, w})});
              if (lhs != rhs)
                assoc.failures.push_back("X=" + std::to_string(nx) + ",Y=" +
                                         std::to_string(ny) + ",Z=" + std::to_string(nz) +
                                         " at (" + u + "," + v + "," + w + ")");
            }
      }
    }
  return LawReport{{assoc, unital, comm}};
}

namespace {

// All total maps dom -> cod as NameMaps.
std::vector<NameMap> all_maps(const FinSet& dom, const FinSet& cod) {
  std::vector<NameMap> out;
  for (const auto& t : all_tuples(cod, dom.size())) {
    NameMap m;
    for (std::size_t i = 0; i < dom.size(); ++i) m[dom.name(i)] = t[i];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

LawRow check_nabla_natural(const FunctorExpr& f, std::size_t max_size) {
  LawRow row{"nabla natural"};
  for (std::size_t nx = 0; nx <= max_size; ++nx)
    for (std::size_t nx2 = 0; nx2 <= max_size; ++nx2)
      for (std::size_t ny = 0; ny <= max_size; ++ny)
        for (std::size_t ny2 = 0; ny2 <= max_size; ++ny2) {
          FinSet x = canonical_set("a", nx), x2 = canonical_set("p", nx2);
          FinSet y = canonical_set("b", ny), y2 = canonical_set("q", ny2);
          if ((x.empty() && !x2.empty()) || (y.empty() && !y2.empty())) {
            // fine: there is exactly one map from the empty set
          }
          if ((!x.empty() && x2.empty()) || (!y.empty() && y2.empty())) continue;
          PairMap n1 = nabla(f, x, y), n2 = nabla(f, x2, y2);
          FinSet fx = eval_on_set(f, x), fy = eval_on_set(f, y);
          for (const auto& fm : all_maps(x, x2))
            for (const auto& gm : all_maps(y, y2)) {
              NameMap ff = eval_on_map(f, x, fm), fg = eval_on_map(f, y, gm);
              NameMap prod_fm;
              for (const auto& a : x.names())
                for (const auto& b : y.names())
                  prod_fm[pair_name(a, b)] = pair_name(fm.at(a), gm.at(b));
              NameMap lifted = eval_on_map(f, product_set(x, y), prod_fm);
              for (const auto& u : fx.names())
                for (const auto& v : fy.names()) {
                  ++row.instances;
                  if (lifted.at(n1.at({u, v})) != n2.at({ff.at(u), fg.at(v)}))
                    row.failures.push_back("naturality at (" + u + "," + v + ")");
                }
            }
        }
  return row;
}

LawRow check_functor_laws(const FunctorExpr& f, std::size_t max_size) {
  LawRow row{"functoriality"};
  for (std::size_t nx = 1; nx <= max_size; ++nx)
    for (std::size_t ny = 1; ny <= max_size; ++ny)
      for (std::size_t nz = 1; nz <= max_size; ++nz) {
        FinSet x = canonical_set("a", nx), y = canonical_set("b", ny), z = canonical_set("c", nz);
        // identity law on X
        if (ny == 1 && nz == 1) {
          NameMap fid = eval_on_map(f, x, identity_map(x));
          ++row.instances;
          if (fid != identity_map(eval_on_set(f, x)))
            row.failures.push_back("identity law on size " + std::to_string(nx));
        }
        for (const auto& fm : all_maps(x, y))
          for (const auto& gm : all_maps(y, z)) {
            ++row.instances;
            NameMap lhs = eval_on_map(f, x, compose_maps(gm, fm));
            NameMap rhs = compose_maps(eval_on_map(f, y, gm), eval_on_map(f, x, fm));
            if (lhs != rhs) row.failures.push_back("composition law failure");
          }
      }
  return row;
}

namespace {

struct SexprParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit SexprParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  std::string token() {
    skip_ws();
    if (pos >= s.size()) throw validation_error("functor expression: unexpected end");
    if (s[pos] == '(' || s[pos] == ')') return std::string(1, s[pos++]);
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')')
      ++pos;
    return s.substr(start, pos - start);
  }

  std::string peek() {
    std::size_t save = pos;
    std::string t = token();
    pos = save;
    return t;
  }

  Monoid parse_monoid_args() {
    std::string carrier = token();
    if (carrier == "unit") return trivial_monoid();
    if (carrier == "bool") return bool_monoid(token());
    throw validation_error("unknown monoid carrier: " + carrier);
  }

  FunctorExpr parse() {
    std::string t = token();
    if (t == "id") return FunctorExpr::id();
    if (t == "idsucc") return idsucc_functor();
    if (t != "(") throw validation_error("functor expression: unexpected token '" + t + "'");
    std::string head = token();
    FunctorExpr result = FunctorExpr::id();
    if (head == "const") {
      result = FunctorExpr::constant(parse_monoid_args());
    } else if (head == "prod") {
      FunctorExpr l = parse();
      FunctorExpr r = parse();
      result = FunctorExpr::prod(std::move(l), std::move(r));
    } else if (head == "sum") {
      FunctorExpr l = parse();
      skip_ws();
      if (peek() != "(") throw validation_error("sum's right child must be (const ...)");
      token();  // (
      std::string inner = token();
      if (inner != "const") throw validation_error("sum's right child must be (const ...)");
      Monoid m = parse_monoid_args();
      if (token() != ")") throw validation_error("expected ')' after const");
      result = FunctorExpr::sum(std::move(l), std::move(m));
    } else if (head == "comp") {
      FunctorExpr o = parse();
      FunctorExpr i = parse();
      result = FunctorExpr::comp(std::move(o), std::move(i));
    } else if (head == "exp") {
      std::vector<std::string> elems;
      while (peek() != ")") elems.push_back(token());
      result = FunctorExpr::exp(FinSet(std::move(elems)));
    } else if (head == "gf") {
      std::vector<std::string> elems;
      while (peek() != ")") elems.push_back(token());
      result = gf_functor(FinSet(std::move(elems)));
    } else {
      throw validation_error("unknown functor head: " + head);
    }
    if (token() != ")") throw validation_error("expected ')'");
    return result;
  }
};

}  // namespace

FunctorExpr parse_functor(const std::string& text) {
  SexprParser p(text);
  FunctorExpr f = p.parse();
  p.skip_ws();
  if (p.pos != text.size())
    throw validation_error("trailing input after functor expression");
  return f;
}

}  // namespace mlab
