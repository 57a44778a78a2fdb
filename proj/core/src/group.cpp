#include "fusioncat/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace fc {

namespace {

std::string elem_str(const FiniteGroup& g, int a) {
  return g.name(a) + " (#" + std::to_string(a) + ")";
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> table, int identity,
                                 std::vector<std::string> names, std::string label) {
  using K = GroupError::Kind;
  const int n = static_cast<int>(table.size());
  if (n == 0) throw GroupError(K::BadInput, "empty table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw GroupError(K::BadInput, "row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw GroupError(K::NotClosed, "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                           ") lies outside 0.." + std::to_string(n - 1));
  }
  if (identity < 0 || identity >= n) throw GroupError(K::NoIdentity, "identity index out of range");
  if (names.empty()) {
    for (int a = 0; a < n; ++a) names.push_back(a == identity ? "e" : "g" + std::to_string(a));
  }
  if (static_cast<int>(names.size()) != n) throw GroupError(K::BadInput, "names length mismatch");

  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->n_ = n;
  G->e_ = identity;
  G->names_ = std::move(names);
  G->label_ = std::move(label);
  G->t_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G->t_[a * n + b] = table[a][b];

  for (int a = 0; a < n; ++a)
    if (table[identity][a] != a || table[a][identity] != a)
      throw GroupError(K::NoIdentity, "element " + elem_str(*G, identity) +
                                          " is not neutral for " + elem_str(*G, a));
  // Latin-square check: a repeated entry in a row means the row is not a permutation.
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen(n, 0), seen_col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (seen[table[a][b]]++)
        throw GroupError(K::NotClosed, "row of " + elem_str(*G, a) + " is not a permutation");
      if (seen_col[table[b][a]]++)
        throw GroupError(K::NotClosed, "column of " + elem_str(*G, a) + " is not a permutation");
    }
  }
  G->inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) G->inv_[a] = b;
    if (G->inv_[a] < 0) throw GroupError(K::NoInverse, "no two-sided inverse for " + elem_str(*G, a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G->mul(G->mul(a, b), c) != G->mul(a, G->mul(b, c)))
          throw GroupError(K::NotAssociative, "associativity fails at (" + elem_str(*G, a) + ", " +
                                                  elem_str(*G, b) + ", " + elem_str(*G, c) + ")");
  return G;
}

int FiniteGroup::pow(int a, int k) const {
  int r = e_;
  if (k < 0) {
    a = inv_[a];
    k = -k;
  }
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != e_; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::index_of(const std::string& nm) const {
  for (int a = 0; a < n_; ++a)
    if (names_[a] == nm) return a;
  return -1;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr g, std::vector<int> elems) : g_(std::move(g)), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  pos_.assign(g_->order(), -1);
  for (size_t i = 0; i < elems_.size(); ++i) {
    int a = elems_[i];
    if (a < 0 || a >= g_->order()) throw GroupError(GroupError::Kind::NotASubgroup, "element out of range");
    pos_[a] = static_cast<int>(i);
  }
  if (!contains(g_->identity()))
    throw GroupError(GroupError::Kind::NotASubgroup, "subset does not contain the identity");
  for (int a : elems_)
    for (int b : elems_)
      if (!contains(g_->mul(a, b)))
        throw GroupError(GroupError::Kind::NotASubgroup,
                         "subset not closed: " + g_->name(a) + "*" + g_->name(b));
}

Subgroup Subgroup::whole(GroupPtr g) {
  std::vector<int> all(g->order());
  for (int a = 0; a < g->order(); ++a) all[a] = a;
  return Subgroup(std::move(g), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr g) {
  int e = g->identity();
  return Subgroup(std::move(g), {e});
}

Subgroup Subgroup::generated(GroupPtr g, const std::vector<int>& gens) {
  std::vector<char> in(g->order(), 0);
  std::vector<int> list{g->identity()};
  in[g->identity()] = 1;
  // closure under right multiplication by generators suffices in a finite group
  for (size_t i = 0; i < list.size(); ++i)
    for (int s : gens) {
      int c = g->mul(list[i], s);
      if (!in[c]) {
        in[c] = 1;
        list.push_back(c);
      }
    }
  return Subgroup(std::move(g), std::move(list));
}

bool Subgroup::is_abelian() const {
  for (int a : elems_)
    for (int b : elems_)
      if (g_->mul(a, b) != g_->mul(b, a)) return false;
  return true;
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (elems_.size() != o.elems_.size()) return elems_.size() < o.elems_.size();
  return elems_ < o.elems_;
}

std::vector<int> Subgroup::generators() const {
  // Fewest generators first, then lexicographically least.
  if (size() == 1) return {};
  std::vector<int> nonid;
  for (int a : elems_)
    if (a != g_->identity()) nonid.push_back(a);
  const int n = static_cast<int>(nonid.size());
  for (int k = 1; k <= n; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<int> gens(k);
      for (int i = 0; i < k; ++i) gens[i] = nonid[idx[i]];
      if (Subgroup::generated(g_, gens).size() == size()) return gens;
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return nonid;
}

std::string Subgroup::to_string() const {
  auto gens = generators();
  if (gens.empty()) return "<e>";
  std::string s = "<";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += g_->name(gens[i]);
  }
  return s + ">";
}

// ---------------------------------------------------------------------------

std::vector<Subgroup> subgroups(const GroupPtr& g) {
  // Breadth-first closure of <S u {a}> starting from the trivial subgroup.
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> frontier{Subgroup::trivial(g)};
  seen.insert(frontier[0].elements());
  out.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier) {
      for (int a = 0; a < g->order(); ++a) {
        if (s.contains(a)) continue;
        auto gg = s.elements();
        gg.push_back(a);
        Subgroup t = Subgroup::generated(g, gg);
        if (seen.insert(t.elements()).second) {
          out.push_back(t);
          next.push_back(t);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup conjugate(const Subgroup& l, int g) {
  std::vector<int> e;
  for (int a : l.elements()) e.push_back(l.parent()->conj(g, a));
  return Subgroup(l.parent(), std::move(e));
}

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const GroupPtr& g) {
  auto all = subgroups(g);
  std::vector<char> used(all.size(), 0);
  std::map<std::vector<int>, size_t> idx;
  for (size_t i = 0; i < all.size(); ++i) idx[all[i].elements()] = i;
  std::vector<SubgroupClass> out;
  for (size_t i = 0; i < all.size(); ++i) {
    if (used[i]) continue;
    SubgroupClass c;
    std::set<std::vector<int>> members;
    for (int x = 0; x < g->order(); ++x) members.insert(conjugate(all[i], x).elements());
    for (const auto& m : members) {
      used[idx[m]] = 1;
      c.members.push_back(all[idx[m]]);
    }
    std::sort(c.members.begin(), c.members.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.elements() < b.elements(); });
    c.representative = c.members.front();
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const SubgroupClass& a, const SubgroupClass& b) { return a.representative < b.representative; });
  return out;
}

Subgroup normalizer(const Subgroup& l) {
  const auto& g = l.parent();
  std::vector<int> e;
  for (int x = 0; x < g->order(); ++x)
    if (conjugate(l, x) == l) e.push_back(x);
  return Subgroup(g, std::move(e));
}

Subgroup centralizer(const GroupPtr& g, int a) { return centralizer_in(Subgroup::whole(g), a); }

Subgroup centralizer_in(const Subgroup& l, int a) {
  const auto& g = l.parent();
  std::vector<int> e;
  for (int x : l.elements())
    if (g->mul(x, a) == g->mul(a, x)) e.push_back(x);
  return Subgroup(g, std::move(e));
}

std::vector<std::vector<int>> element_conjugacy_classes(const Subgroup& l) {
  const auto& g = l.parent();
  std::vector<char> used(g->order(), 0);
  std::vector<std::vector<int>> out;
  for (int a : l.elements()) {
    if (used[a]) continue;
    std::set<int> cls;
    for (int x : l.elements()) cls.insert(g->conj(x, a));
    for (int c : cls) used[c] = 1;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

std::vector<std::vector<int>> element_conjugacy_classes(const GroupPtr& g) {
  return element_conjugacy_classes(Subgroup::whole(g));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<int> e;
  for (int x : a.elements())
    if (b.contains(x)) e.push_back(x);
  return Subgroup(a.parent(), std::move(e));
}

DoubleCosetDecomposition double_cosets(const Subgroup& left, const Subgroup& right) {
  const auto& g = left.parent();
  DoubleCosetDecomposition d{left, right, {}, {}};
  std::vector<char> used(g->order(), 0);
  for (int x = 0; x < g->order(); ++x) {
    if (used[x]) continue;
    std::set<int> c;
    for (int a : left.elements())
      for (int b : right.elements()) c.insert(g->mul(g->mul(a, x), b));
    for (int y : c) used[y] = 1;
    d.representatives.push_back(x);
    d.cosets.emplace_back(c.begin(), c.end());
  }
  return d;
}

bool product_is_whole(const Subgroup& k, const Subgroup& n) {
  const auto& g = k.parent();
  std::vector<char> hit(g->order(), 0);
  for (int a : k.elements())
    for (int b : n.elements()) hit[g->mul(a, b)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_exact_factorization(const Subgroup& k, const Subgroup& n) {
  return intersection(k, n).size() == 1 && k.size() * n.size() == k.parent()->order();
}

// ---------------------------------------------------------------------------

namespace builtin {

GroupPtr trivial() {
  static const GroupPtr g = FiniteGroup::from_table({{0}}, 0, {"e"}, "trivial");
  return g;
}

namespace {

GroupPtr make_cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = i == 0 ? "e" : i == 1 ? "x" : "x^" + std::to_string(i);
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return FiniteGroup::from_table(t, 0, names, "Z" + std::to_string(n));
}

GroupPtr make_klein() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return FiniteGroup::from_table(t, 0, {"e", "x", "y", "xy"}, "Z2xZ2");
}

GroupPtr make_s3() {
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int k1 = a % 3, e1 = a / 3, k2 = b % 3, e2 = b / 3;
      if (e1) k2 = (3 - k2) % 3;
      t[a][b] = (k1 + k2) % 3 + 3 * ((e1 + e2) % 2);
    }
  return FiniteGroup::from_table(t, 0, {"e", "r", "r2", "s", "rs", "r2s"}, "S3");
}

GroupPtr make_d8() {
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int i1 = a & 1, j1 = (a >> 1) & 1, n1 = a >> 2;
      int i2 = b & 1, j2 = (b >> 1) & 1, n2 = b >> 2;
      if (n1) std::swap(i2, j2);  // z x = y z
      t[a][b] = (i1 ^ i2) | ((j1 ^ j2) << 1) | ((n1 ^ n2) << 2);
    }
  return FiniteGroup::from_table(t, 0, {"e", "x", "y", "xy", "z", "xz", "yz", "xyz"}, "D8");
}

}  // namespace

// Builtins are shared instances, so data built from separate calls lives on one group.
GroupPtr cyclic(int n) {
  if (n < 1) throw GroupError(GroupError::Kind::BadInput, "cyclic order must be positive");
  static std::mutex mu;
  static std::map<int, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& g = cache[n];
  if (!g) g = make_cyclic(n);
  return g;
}

GroupPtr klein() {
  static const GroupPtr g = make_klein();
  return g;
}

GroupPtr s3() {
  static const GroupPtr g = make_s3();
  return g;
}

GroupPtr d8() {
  static const GroupPtr g = make_d8();
  return g;
}

GroupPtr by_name(const std::string& name) {
  if (name == "trivial" || name == "Z1") return trivial();
  if (name == "Z2xZ2" || name == "K4" || name == "klein") return klein();
  if (name == "S3") return s3();
  if (name == "D8") return d8();
  if (name.size() > 1 && (name[0] == 'Z' || name[0] == 'C')) {
    try {
      size_t pos = 0;
      int n = std::stoi(name.substr(1), &pos);
      if (pos + 1 == name.size() && n >= 1 && n <= 64) return cyclic(n);
    } catch (const std::exception&) {
    }
  }
  throw GroupError(GroupError::Kind::BadInput, "unknown builtin group '" + name + "'");
}

}  // namespace builtin

Subgroup parse_subgroup(const GroupPtr& g, const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (c != '<' && c != '>' && c != ' ' && c != '{' && c != '}') s += c;
  if (s == "G" || s == "all") return Subgroup::whole(g);
  std::vector<int> gens;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int a = g->index_of(tok);
    if (a < 0) {
      bool digits = std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; });
      if (digits) a = std::stoi(tok);
    }
    if (a < 0 || a >= g->order())
      throw GroupError(GroupError::Kind::BadInput, "unknown element '" + tok + "'");
    gens.push_back(a);
  }
  return Subgroup::generated(g, gens);
}

}  // namespace fc
