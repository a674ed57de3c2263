#include "dlrep/coxeter.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace dlrep {

Word word_from_string(const std::string& s) {
  Word w;
  for (char ch : s) {
    if (ch < '1' || ch > '9') throw data_error("word_from_string: bad character in '" + s + "'");
    w.push_back(ch - '0');
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (int i : w) {
    if (i < 1 || i > 9) throw data_error("word_to_string: generator index out of range");
    s.push_back(static_cast<char>('0' + i));
  }
  return s;
}

namespace {

// Coxeter matrix for the supported crystallographic types.  Bonds:
// A: chain of 3s; B/C: chain with a 4 on the last bond; D: fork at n-2;
// E: chain 1-3-4-5-...-n with 2 attached to 4; F4: 3-4-3 chain bonds
// (m(2,3) = 4); G2: single bond 6.
std::vector<std::vector<int>> coxeter_matrix(const std::string& type, int n) {
  auto bad = [&]() {
    throw data_error("unsupported Coxeter type " + type + std::to_string(n));
  };
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto bond = [&](int i, int j, int v) { m[i - 1][j - 1] = m[j - 1][i - 1] = v; };
  if (type == "A") {
    if (n < 1) bad();
    for (int i = 1; i < n; ++i) bond(i, i + 1, 3);
  } else if (type == "B" || type == "C") {
    if (n < 2) bad();
    for (int i = 1; i < n - 1; ++i) bond(i, i + 1, 3);
    bond(n - 1, n, 4);
  } else if (type == "D") {
    if (n < 4) bad();
    for (int i = 1; i < n - 1; ++i) bond(i, i + 1, 3);
    m[n - 2][n - 1] = m[n - 1][n - 2] = 2;  // undo chain end
    bond(n - 2, n, 3);
    bond(n - 2, n - 1, 3);
  } else if (type == "E") {
    if (n < 6 || n > 8) bad();
    bond(1, 3, 3);
    bond(2, 4, 3);
    for (int i = 3; i < n; ++i) bond(i, i + 1, 3);
  } else if (type == "F") {
    if (n != 4) bad();
    bond(1, 2, 3);
    bond(2, 3, 4);
    bond(3, 4, 3);
  } else if (type == "G") {
    if (n != 2) bad();
    bond(1, 2, 6);
  } else {
    bad();
  }
  return m;
}

// An integer Cartan matrix realizing the Coxeter matrix:
// a_ij * a_ji = 4 cos^2(pi/m) for bonds, with the asymmetric split
// (-1, -2) for m = 4 and (-1, -3) for m = 6.
std::vector<std::vector<int>> cartan_from_coxeter(const std::vector<std::vector<int>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      switch (m[i][j]) {
        case 2: break;
        case 3: a[i][j] = a[j][i] = -1; break;
        case 4: a[i][j] = -1; a[j][i] = -2; break;
        case 6: a[i][j] = -1; a[j][i] = -3; break;
        default: throw data_error("cartan_from_coxeter: bond not crystallographic");
      }
    }
  return a;
}

}  // namespace

CoxeterSystem::CoxeterSystem(const std::string& type, int rank)
    : type_(type), rank_(rank), m_(coxeter_matrix(type, rank)), cartan_(cartan_from_coxeter(m_)) {
  build_roots();
}

void CoxeterSystem::build_roots() {
  // Close the simple roots under all simple reflections; keep the positives.
  std::set<std::vector<int>> seen;
  std::queue<std::vector<int>> todo;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push(e);
  }
  while (!todo.empty()) {
    auto v = todo.front();
    todo.pop();
    for (int i = 0; i < rank_; ++i) {
      auto w = v;
      i64 pair = 0;
      for (int j = 0; j < rank_; ++j) pair += static_cast<i64>(cartan_[i][j]) * v[j];
      w[i] = v[i] - static_cast<int>(pair);
      if (seen.insert(w).second) todo.push(w);
    }
  }
  for (const auto& v : seen)
    if (!is_negative_root(v)) pos_roots_.push_back(v);
}

bool CoxeterSystem::is_negative_root(const std::vector<int>& v) const {
  for (int x : v)
    if (x != 0) return x < 0;
  throw data_error("is_negative_root: zero vector is not a root");
}

CoxeterSystem::Element CoxeterSystem::identity() const {
  Element e;
  e.mat.assign(rank_ * rank_, 0);
  for (int i = 0; i < rank_; ++i) e.mat[i * rank_ + i] = 1;
  return e;
}

CoxeterSystem::Element CoxeterSystem::generator(int i) const {
  if (i < 1 || i > rank_) throw data_error("generator index out of range");
  Element s = identity();
  for (int j = 0; j < rank_; ++j) s.mat[(i - 1) * rank_ + j] -= cartan_[i - 1][j];
  return s;
}

CoxeterSystem::Element CoxeterSystem::product(const Element& a, const Element& b) const {
  Element r;
  r.mat.assign(rank_ * rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) {
      int aik = a.mat[i * rank_ + k];
      if (aik == 0) continue;
      for (int j = 0; j < rank_; ++j) r.mat[i * rank_ + j] += aik * b.mat[k * rank_ + j];
    }
  return r;
}

CoxeterSystem::Element CoxeterSystem::inverse(const Element& a) const {
  Word w = canonical_word(a);
  std::reverse(w.begin(), w.end());
  return from_word(w);
}

CoxeterSystem::Element CoxeterSystem::from_word(const Word& w) const {
  Element r = identity();
  for (int i : w) r = product(r, generator(i));
  return r;
}

std::vector<int> CoxeterSystem::apply(const Element& w, const std::vector<int>& v) const {
  std::vector<int> r(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    i64 s = 0;
    for (int j = 0; j < rank_; ++j) s += static_cast<i64>(w.mat[i * rank_ + j]) * v[j];
    r[i] = static_cast<int>(s);
  }
  return r;
}

unsigned CoxeterSystem::length(const Element& w) const {
  unsigned count = 0;
  for (const auto& r : pos_roots_)
    if (is_negative_root(apply(w, r))) ++count;
  return count;
}

Word CoxeterSystem::canonical_word(const Element& w) const {
  // Repeatedly strip the smallest left descent: i is a left descent of w
  // exactly when w^{-1}(alpha_i) < 0, equivalently l(s_i w) < l(w).
  Word out;
  Element x = w;
  unsigned len = length(x);
  while (len > 0) {
    bool found = false;
    for (int i = 1; i <= rank_ && !found; ++i) {
      Element y = product(generator(i), x);
      unsigned ly = length(y);
      if (ly < len) {
        out.push_back(i);
        x = y;
        len = ly;
        found = true;
      }
    }
    if (!found) throw data_error("canonical_word: no descent found (corrupt element)");
  }
  return out;
}

bool CoxeterSystem::bruhat_leq(const Element& u, const Element& w) const {
  // u <= w iff u is the product of some subword of a reduced word of w that
  // is itself reduced.  The set of all such products is built left to right:
  // each letter may extend an existing element (kept only when the length
  // goes up) or be skipped.
  Word ww = canonical_word(w);
  std::set<Element> reach = {identity()};
  for (int letter : ww) {
    std::set<Element> next = reach;
    for (const auto& x : reach) {
      Element y = product(x, generator(letter));
      if (length(y) > length(x)) next.insert(y);
    }
    reach = std::move(next);
  }
  return reach.count(u) > 0;
}

bool CoxeterSystem::bruhat_leq(const Word& u, const Word& w) const {
  return bruhat_leq(from_word(u), from_word(w));
}

CoxeterSystem::Element CoxeterSystem::longest_element() const {
  // Greedy ascent: multiply by any generator that increases length until
  // every generator is a descent.
  Element x = identity();
  unsigned len = 0;
  unsigned total = static_cast<unsigned>(pos_roots_.size());
  while (len < total) {
    bool moved = false;
    for (int i = 1; i <= rank_ && !moved; ++i) {
      Element y = product(x, generator(i));
      unsigned ly = length(y);
      if (ly > len) {
        x = y;
        len = ly;
        moved = true;
      }
    }
    if (!moved) throw data_error("longest_element: stuck below the top length");
  }
  return x;
}

CoxeterSystem::Element CoxeterSystem::coxeter_element() const {
  Word w;
  for (int i = 1; i <= rank_; ++i) w.push_back(i);
  return from_word(w);
}

unsigned CoxeterSystem::coxeter_number() const {
  Element c = coxeter_element();
  Element x = c;
  Element e = identity();
  unsigned h = 1;
  while (!(x == e)) {
    x = product(x, c);
    ++h;
    if (h > 100) throw data_error("coxeter_number: element order too large");
  }
  return h;
}

std::vector<CoxeterSystem::Element> CoxeterSystem::elements(size_t cap) const {
  std::vector<Element> out;
  std::set<Element> seen;
  std::queue<Element> todo;
  Element e = identity();
  seen.insert(e);
  todo.push(e);
  while (!todo.empty()) {
    Element x = todo.front();
    todo.pop();
    out.push_back(x);
    for (int i = 1; i <= rank_; ++i) {
      Element y = product(x, generator(i));
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw data_error("CoxeterSystem::elements: group order exceeds cap");
        todo.push(y);
      }
    }
  }
  return out;
}

Poly CoxeterSystem::poincare_polynomial(size_t cap) const {
  std::vector<i64> hist(pos_roots_.size() + 1, 0);
  for (const auto& w : elements(cap)) hist[length(w)] += 1;
  return Poly(hist);
}

std::vector<std::vector<CoxeterSystem::Element>> CoxeterSystem::conjugacy_classes(size_t cap) const {
  auto all = elements(cap);
  std::set<Element> unassigned(all.begin(), all.end());
  std::vector<std::vector<Element>> classes;
  while (!unassigned.empty()) {
    Element seed = *unassigned.begin();
    // Orbit of seed under conjugation by generators.
    std::set<Element> orbit = {seed};
    std::queue<Element> todo;
    todo.push(seed);
    while (!todo.empty()) {
      Element x = todo.front();
      todo.pop();
      for (int i = 1; i <= rank_; ++i) {
        Element g = generator(i);
        Element y = product(product(g, x), g);
        if (orbit.insert(y).second) todo.push(y);
      }
    }
    classes.emplace_back(orbit.begin(), orbit.end());
    for (const auto& x : orbit) unassigned.erase(x);
  }
  return classes;
}

std::vector<int> CoxeterSystem::diagram_automorphism() const {
  std::vector<int> d(rank_ + 1, 0);
  if (type_ == "A" && rank_ >= 2) {
    for (int i = 1; i <= rank_; ++i) d[i] = rank_ + 1 - i;
  } else if (type_ == "D") {
    for (int i = 1; i <= rank_; ++i) d[i] = i;
    std::swap(d[rank_ - 1], d[rank_]);
  } else if (type_ == "E" && rank_ == 6) {
    d[1] = 6; d[6] = 1; d[3] = 5; d[5] = 3; d[2] = 2; d[4] = 4;
  } else {
    throw data_error("diagram_automorphism: type " + type_ + std::to_string(rank_) +
                     " has no nontrivial diagram automorphism");
  }
  return d;
}

std::vector<Word> CoxeterSystem::min_reps_impl(const std::vector<int>* twist, size_t cap) const {
  std::vector<std::vector<Element>> classes;
  if (!twist) {
    classes = conjugacy_classes(cap);
  } else {
    // Twisted conjugacy orbits: x -> g x delta(g)^{-1}; closing under the
    // generators g = s_i suffices.
    auto all = elements(cap);
    std::set<Element> unassigned(all.begin(), all.end());
    while (!unassigned.empty()) {
      Element seed = *unassigned.begin();
      std::set<Element> orbit = {seed};
      std::queue<Element> todo;
      todo.push(seed);
      while (!todo.empty()) {
        Element x = todo.front();
        todo.pop();
        for (int i = 1; i <= rank_; ++i) {
          Element y = product(product(generator(i), x), generator((*twist)[i]));
          if (orbit.insert(y).second) todo.push(y);
        }
      }
      classes.emplace_back(orbit.begin(), orbit.end());
      for (const auto& x : orbit) unassigned.erase(x);
    }
  }

  std::vector<Word> reps;
  for (const auto& cls : classes) {
    unsigned best = UINT32_MAX;
    for (const auto& x : cls) best = std::min(best, length(x));
    Word rep;
    bool have = false;
    for (const auto& x : cls) {
      if (length(x) != best) continue;
      Word w = canonical_word(x);
      if (!have || w < rep) {
        rep = w;
        have = true;
      }
    }
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return reps;
}

std::vector<Word> CoxeterSystem::min_class_representatives(size_t cap) const {
  return min_reps_impl(nullptr, cap);
}

std::vector<Word> CoxeterSystem::min_twisted_class_representatives(size_t cap) const {
  auto d = diagram_automorphism();
  return min_reps_impl(&d, cap);
}

}  // namespace dlrep
