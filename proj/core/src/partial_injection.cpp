#include "bis/partial_injection.hpp"

#include <algorithm>
#include <set>

#include "bis/errors.hpp"

namespace bis {

PartialInjection::PartialInjection(int ambient, std::vector<std::pair<int, int>> pairs)
    : n(ambient), map(std::move(pairs)) {
  std::sort(map.begin(), map.end());
  validate(*this);
}

PartialInjection PartialInjection::identity(int n) {
  PartialInjection p;
  p.n = n;
  for (int i = 1; i <= n; ++i) p.map.emplace_back(i, i);
  return p;
}

PartialInjection PartialInjection::empty(int n) {
  PartialInjection p;
  p.n = n;
  return p;
}

PartialInjection PartialInjection::id_on(int n, const std::vector<int>& subset) {
  PartialInjection p;
  p.n = n;
  for (int i : subset) p.map.emplace_back(i, i);
  std::sort(p.map.begin(), p.map.end());
  return p;
}

bool PartialInjection::defined_at(int s) const {
  for (auto& [a, b] : map)
    if (a == s) return true;
  return false;
}

int PartialInjection::at(int s) const {
  for (auto& [a, b] : map)
    if (a == s) return b;
  return 0;
}

PartialInjection PartialInjection::inverse() const {
  PartialInjection p;
  p.n = n;
  for (auto& [a, b] : map) p.map.emplace_back(b, a);
  std::sort(p.map.begin(), p.map.end());
  return p;
}

std::vector<int> PartialInjection::domain() const {
  std::vector<int> d;
  for (auto& [a, b] : map) d.push_back(a);
  return d;
}

std::vector<int> PartialInjection::range() const {
  std::vector<int> r;
  for (auto& [a, b] : map) r.push_back(b);
  std::sort(r.begin(), r.end());
  return r;
}

bool PartialInjection::operator<(const PartialInjection& other) const {
  if (n != other.n) return n < other.n;
  return map < other.map;
}

std::string PartialInjection::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto& [a, b] : map) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(a) + ">" + std::to_string(b);
  }
  s += "}";
  return s;
}

PartialInjection compose(const PartialInjection& x, const PartialInjection& y) {
  if (x.n != y.n) throw InputError("compose: ambient sizes differ");
  PartialInjection p;
  p.n = x.n;
  for (auto& [s, t] : y.map)
    if (x.defined_at(t)) p.map.emplace_back(s, x.at(t));
  std::sort(p.map.begin(), p.map.end());
  return p;
}

void validate(const PartialInjection& p) {
  if (p.n < 0) throw InputError("partial injection: negative ambient size");
  std::set<int> src, tgt;
  for (auto& [a, b] : p.map) {
    if (a < 1 || a > p.n || b < 1 || b > p.n)
      throw InputError("partial injection: entry out of range 1.." + std::to_string(p.n));
    if (!src.insert(a).second) throw InputError("partial injection: duplicate source");
    if (!tgt.insert(b).second) throw InputError("partial injection: duplicate target");
  }
}

}  // namespace bis
