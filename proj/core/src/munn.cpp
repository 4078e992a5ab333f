#include "bis/munn.hpp"

#include <algorithm>
#include <set>

#include "bis/errors.hpp"

namespace bis {

namespace {

// word comparison: by length first, then contents
bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<int> reduce_concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  for (int c : b) {
    if (!out.empty() && out.back() == -c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

std::vector<int> word_inverse(const std::vector<int>& a) {
  std::vector<int> out(a.rbegin(), a.rend());
  for (int& c : out) c = -c;
  return out;
}

void sort_vertices(std::vector<std::vector<int>>& v) {
  std::sort(v.begin(), v.end(), word_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool MunnTree::operator<(const MunnTree& other) const {
  if (alphabet != other.alphabet) return alphabet < other.alphabet;
  if (end != other.end) return word_less(end, other.end);
  return vertices < other.vertices;
}

std::string MunnTree::to_string() const {
  auto word_str = [](const std::vector<int>& w) {
    std::string s;
    for (int c : w) {
      s += static_cast<char>('a' + std::abs(c) - 1);
      if (c < 0) s += '\'';
    }
    return s.empty() ? std::string("e") : s;
  };
  std::string s = "<";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ",";
    s += word_str(vertices[i]);
  }
  s += "|" + word_str(end) + ">";
  return s;
}

MunnTree munn_generator(int alphabet, int letter) {
  if (letter < 1 || letter > alphabet) throw InputError("munn_generator: letter out of range");
  MunnTree t;
  t.alphabet = alphabet;
  t.vertices = {{}, {letter}};
  sort_vertices(t.vertices);
  t.end = {letter};
  return t;
}

MunnTree munn_mul(const MunnTree& x, const MunnTree& y) {
  if (x.alphabet != y.alphabet) throw InputError("munn_mul: alphabets differ");
  MunnTree t;
  t.alphabet = x.alphabet;
  t.vertices = x.vertices;
  for (auto& v : y.vertices) t.vertices.push_back(reduce_concat(x.end, v));
  sort_vertices(t.vertices);
  t.end = reduce_concat(x.end, y.end);
  return t;
}

MunnTree munn_inv(const MunnTree& x) {
  MunnTree t;
  t.alphabet = x.alphabet;
  std::vector<int> w = word_inverse(x.end);
  for (auto& v : x.vertices) t.vertices.push_back(reduce_concat(w, v));
  sort_vertices(t.vertices);
  t.end = w;
  return t;
}

MunnTree munn_d(const MunnTree& x) { return munn_mul(munn_inv(x), x); }
MunnTree munn_r(const MunnTree& x) { return munn_mul(x, munn_inv(x)); }

bool munn_idempotent(const MunnTree& x) { return x.end.empty(); }

bool munn_leq(const MunnTree& x, const MunnTree& y) { return munn_mul(y, munn_d(x)) == x; }

std::vector<int> munn_word(const MunnTree& x) {
  // leaves = vertices that are not proper prefixes of other vertices
  std::vector<int> word;
  for (auto& v : x.vertices) {
    bool leaf = true;
    for (auto& u : x.vertices) {
      if (u.size() == v.size() + 1 && std::equal(v.begin(), v.end(), u.begin())) {
        leaf = false;
        break;
      }
    }
    if (!leaf || v.empty()) continue;
    for (int c : v) word.push_back(c);
    for (int c : word_inverse(v)) word.push_back(c);
  }
  for (int c : x.end) word.push_back(c);
  return word;
}

}  // namespace bis
