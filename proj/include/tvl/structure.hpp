#pragma once

#include <optional>
#include <vector>

#include "tvl/group.hpp"

namespace tvl {

enum class TriState { Unknown, Yes, No };

/// A subgroup of a parent group, stored as the strictly sorted list of its
/// element indices. Construction validates closure and Lagrange.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int g) const {
    return g >= 0 && g < static_cast<int>(mask_.size()) && mask_[g] != 0;
  }
  const std::vector<char>& mask() const { return mask_; }

  bool is_whole_group() const { return order() == parent_->order(); }
  bool is_trivial() const { return order() == 1; }

  TriState normal_flag() const { return normal_; }
  TriState abelian_flag() const { return abelian_; }
  TriState central_flag() const { return central_; }

  friend bool is_normal(const Subgroup& h);
  friend bool is_abelian(const Subgroup& h);
  friend bool is_central(const Subgroup& h);
  friend Subgroup center(const GroupPtr& g);
  friend Subgroup commutator_subgroup(const GroupPtr& g);
  friend std::vector<Subgroup> normal_subgroups(const GroupPtr& g, const Config& cfg);

 private:
  GroupPtr parent_;
  std::vector<int> members_;
  std::vector<char> mask_;
  mutable TriState normal_ = TriState::Unknown;
  mutable TriState abelian_ = TriState::Unknown;
  mutable TriState central_ = TriState::Unknown;
};

/// Conjugacy classes, ids ordered by least member.
struct ClassPartition {
  std::vector<int> class_of;              // element -> class id
  std::vector<std::vector<int>> classes;  // sorted members per class
  std::vector<int> representatives;       // least member per class
  int count() const { return static_cast<int>(classes.size()); }
};

struct QuotientMap {
  GroupPtr source;
  Subgroup kernel;
  GroupPtr quotient;
  std::vector<int> projection;  // |source| entries
  std::vector<int> section;     // least-index preimage per coset
  int project(int g) const { return projection[g]; }
};

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<int>& seed);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);

Subgroup centralizer(const GroupPtr& g, int target);
Subgroup centralizer(const GroupPtr& g, const std::vector<int>& targets);
Subgroup normalizer(const GroupPtr& g, const std::vector<int>& members);
Subgroup center(const GroupPtr& g);
Subgroup commutator_subgroup(const GroupPtr& g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

bool is_normal(const Subgroup& h);
bool is_abelian(const Subgroup& h);
bool is_central(const Subgroup& h);  // h <= Z(parent)

ClassPartition conjugacy_classes(const GroupPtr& g);

/// Quotient by a normal subgroup. Cosets are labeled by their least member
/// and indexed in label order, so the identity coset is element 0.
QuotientMap quotient(const GroupPtr& g, const Subgroup& h);

/// Every normal subgroup: the join lattice generated by the normal closures
/// of single conjugacy classes, plus the trivial and full subgroups. Sorted
/// by order, then lexicographically by members.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g, const Config& cfg = default_config());

/// Deterministic Sylow p-subgroup: grow from the trivial subgroup, always
/// adjoining the least normalizer element x with x not in P and x^p in P.
Subgroup sylow_subgroup(const GroupPtr& g, int p);

/// A subgroup copied out as a standalone group; to_parent maps the new
/// indices (0..|H|-1, sorted member order) back to the parent's.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<int> to_parent;
};
SubgroupGroup subgroup_to_group(const Subgroup& h, const Config& cfg = default_config());

/// Number of conjugacy classes of h viewed as a group in its own right.
int class_count(const Subgroup& h);

/// A homomorphism from an abelian subgroup H into the roots of unity,
/// stored exactly as exponents in Z/m where m is the exponent of H.
struct LinearCharacter {
  GroupPtr parent;
  std::vector<int> h_members;  // sorted ambient indices
  int modulus = 1;             // m
  std::vector<int> exponents;  // parallel to h_members

  int exponent_of(int ambient) const;
  bool is_faithful() const;
  std::vector<int> kernel_members() const;
};

/// All |H| linear characters of an abelian subgroup, produced from a greedy
/// cyclic decomposition (repeatedly split off a least-index element of
/// maximal order). Character 0 is trivial; the list forms a group under
/// pointwise exponent addition.
std::vector<LinearCharacter> linear_characters(const Subgroup& h,
                                               const Config& cfg = default_config());

}  // namespace tvl
