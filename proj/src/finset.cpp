#include "mlab/finset.hpp"

#include <algorithm>

namespace mlab {

FinSet::FinSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i > 0 && names_[i] == names_[i - 1]) {
      throw validation_error("duplicate element name: " + names_[i]);
    }
    index_[names_[i]] = static_cast<int>(i);
  }
}

int FinSet::index_of(const std::string& n) const {
  auto it = index_.find(n);
  return it == index_.end() ? -1 : it->second;
}

int FinSet::at(const std::string& n) const {
  int i = index_of(n);
  if (i < 0) throw validation_error("unknown element: " + n);
  return i;
}

NameMap identity_map(const FinSet& x) {
  NameMap m;
  for (const auto& n : x.names()) m[n] = n;
  return m;
}

NameMap compose_maps(const NameMap& g, const NameMap& f) {
  NameMap m;
  for (const auto& [k, v] : f) m[k] = g.at(v);
  return m;
}

std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::string func_name(const std::vector<std::string>& images) {
  std::string s = "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i > 0) s += ",";
    s += images[i];
  }
  return s + "]";
}

FinSet product_set(const FinSet& x, const FinSet& y) {
  std::vector<std::string> names;
  names.reserve(x.size() * y.size());
  for (const auto& a : x.names())
    for (const auto& b : y.names()) names.push_back(pair_name(a, b));
  return FinSet(std::move(names));
}

std::vector<std::vector<std::string>> all_tuples(const FinSet& cod,
                                                 std::size_t n) {
  std::vector<std::vector<std::string>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<std::size_t> idx(n, 0);
  if (cod.empty()) return out;  // no tuples over an empty codomain
  for (;;) {
    std::vector<std::string> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = cod.name(idx[i]);
    out.push_back(std::move(t));
    std::size_t p = n;
    while (p > 0) {
      --p;
      if (++idx[p] < cod.size()) break;
      idx[p] = 0;
      if (p == 0) return out;
    }
  }
}

FinSet canonical_set(const std::string& prefix, std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(prefix + std::to_string(i));
  return FinSet(std::move(names));
}

const FinSet& unit_set() {
  static const FinSet u(std::vector<std::string>{"*"});
  return u;
}

}  // namespace mlab
