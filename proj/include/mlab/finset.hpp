#pragma once

#include <map>
#include <string>
#include <vector>

#include "mlab/errors.hpp"

namespace mlab {

// Finite set with canonically (lexicographically) ordered, distinct element
// names. All enumerations downstream iterate in this order, which is what
// makes CLI/JSON output byte-stable.
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }

  bool contains(const std::string& n) const { return index_.count(n) != 0; }
  // Index in canonical order, or -1.
  int index_of(const std::string& n) const;
  // Like index_of but throws validation_error for unknown names.
  int at(const std::string& n) const;

  bool operator==(const FinSet&) const = default;

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

// Total map between finite sets, keyed by element name.
using NameMap = std::map<std::string, std::string>;

NameMap identity_map(const FinSet& x);
NameMap compose_maps(const NameMap& g, const NameMap& f);  // g after f

// Canonical element naming helpers shared by every functor evaluation.
std::string pair_name(const std::string& a, const std::string& b);
std::string func_name(const std::vector<std::string>& images);

FinSet product_set(const FinSet& x, const FinSet& y);

// All n-tuples over cod, in lexicographic order of positions (position 0
// varies slowest). Used to enumerate X^A elements and function spaces.
std::vector<std::vector<std::string>> all_tuples(const FinSet& cod,
                                                 std::size_t n);

// Canonical test sets {<prefix>0, ..., <prefix>{k-1}} for law checking.
FinSet canonical_set(const std::string& prefix, std::size_t k);

// The monoidal unit object: the singleton {*}.
const FinSet& unit_set();

}  // namespace mlab
