#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fc {

class GroupError : public std::runtime_error {
 public:
  enum class Kind { NotAssociative, NoIdentity, NoInverse, NotClosed, NotASubgroup, BadInput };
  GroupError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Dense-index finite group given by its Cayley table.
class FiniteGroup {
 public:
  // Validates the table; throws GroupError naming the offending element or triple.
  static GroupPtr from_table(std::vector<std::vector<int>> table, int identity,
                             std::vector<std::string> names = {}, std::string label = "");

  int order() const { return n_; }
  int identity() const { return e_; }
  int mul(int a, int b) const { return t_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  // g h g^-1
  int conj(int g, int h) const { return mul(mul(g, h), inv_[g]); }
  int pow(int a, int k) const;
  int element_order(int a) const;
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 if absent
  const std::string& label() const { return label_; }
  bool is_abelian() const;
  std::vector<std::vector<int>> table() const;

 private:
  FiniteGroup() = default;
  int n_ = 0;
  int e_ = 0;
  std::vector<int> t_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::string label_;
};

// Sorted element list plus a position lookup into it.
class Subgroup {
 public:
  Subgroup() = default;
  // Checks closure; throws GroupError::NotASubgroup otherwise.
  Subgroup(GroupPtr g, std::vector<int> elems);
  static Subgroup whole(GroupPtr g);
  static Subgroup trivial(GroupPtr g);
  static Subgroup generated(GroupPtr g, const std::vector<int>& gens);

  const GroupPtr& parent() const { return g_; }
  const std::vector<int>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int a) const { return a >= 0 && a < static_cast<int>(pos_.size()) && pos_[a] >= 0; }
  bool is_abelian() const;
  // index of element a inside elements(), -1 if absent
  int position(int a) const { return contains(a) ? pos_[a] : -1; }
  std::string to_string() const;  // "<x,y>"-style generator string when possible, else element list
  std::vector<int> generators() const;  // lexicographically small generating set

  bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }
  bool operator<(const Subgroup& o) const;  // order, then lexicographic

 private:
  GroupPtr g_;
  std::vector<int> elems_;
  std::vector<int> pos_;
};

struct DoubleCosetDecomposition {
  Subgroup left, right;
  std::vector<int> representatives;          // least element of each coset
  std::vector<std::vector<int>> cosets;      // sorted element lists
};

struct SubgroupClass {
  Subgroup representative;            // lexicographically least member
  std::vector<Subgroup> members;
};

// All subgroups, sorted by order then lexicographically.
std::vector<Subgroup> subgroups(const GroupPtr& g);
std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const GroupPtr& g);
Subgroup normalizer(const Subgroup& l);
Subgroup centralizer(const GroupPtr& g, int a);
// centralizer of a inside l
Subgroup centralizer_in(const Subgroup& l, int a);
// conjugacy classes of elements of l under l-conjugation, each sorted, ordered by least element
std::vector<std::vector<int>> element_conjugacy_classes(const Subgroup& l);
std::vector<std::vector<int>> element_conjugacy_classes(const GroupPtr& g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
// g L g^-1
Subgroup conjugate(const Subgroup& l, int g);
DoubleCosetDecomposition double_cosets(const Subgroup& left, const Subgroup& right);
bool is_exact_factorization(const Subgroup& k, const Subgroup& n);
// K N = G as sets (not necessarily exact)
bool product_is_whole(const Subgroup& k, const Subgroup& n);

namespace builtin {
GroupPtr trivial();
GroupPtr cyclic(int n);     // elements x^i, index i
GroupPtr klein();           // x^i y^j, index i + 2j
GroupPtr s3();              // r^k s^e, index k + 3e, s r = r^-1 s
GroupPtr d8();              // x^i y^j z^n, index i + 2j + 4n, zx = yz
// "trivial", "Z<n>", "Z2xZ2", "S3", "D8"
GroupPtr by_name(const std::string& name);
}  // namespace builtin

// Parses a generator string such as "<x,y>", "xy,z", "e" against element names.
Subgroup parse_subgroup(const GroupPtr& g, const std::string& spec);

}  // namespace fc
