#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tvl/config.hpp"
#include "tvl/errors.hpp"

namespace tvl {

enum class Provenance { CayleyFile, PermutationClosure, BuiltinFamily, Product };

const char* to_string(Provenance p);

/// A finite group on elements {0,...,order-1} with index 0 the identity,
/// held as full multiplication and inverse tables. Immutable once built.
///
/// Convention: multiplication composes left-to-right (for permutation groups
/// the left factor acts first), so conjugation is the right action
/// g^x = x^{-1} g x.
class Group {
 public:
  int order() const { return order_; }
  const std::string& name() const { return name_; }
  Provenance provenance() const { return provenance_; }

  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::vector<int>& mul_table() const { return mul_; }  // row-major

  int power(int g, long long e) const;
  int element_order(int g) const;
  int conjugate(int g, int x) const { return mul(mul(inv(x), g), x); }
  int commutator(int g, int x) const { return mul(mul(inv(g), inv(x)), mul(g, x)); }

  long long exponent() const;  // lcm of element orders
  bool is_abelian() const;

  /// Element images when the group was enumerated from permutations
  /// (index i -> image array of element i); empty otherwise.
  const std::vector<std::vector<int>>& perm_images() const { return perm_images_; }

  /// Greedy generating set: repeatedly adjoin the least element outside the
  /// closure of the ones picked so far.
  std::vector<int> generating_set() const;

  Group(std::string name, Provenance prov, int order, std::vector<int> mul,
        std::vector<int> inv, std::vector<std::vector<int>> perm_images);

 private:
  int order_;
  std::string name_;
  Provenance provenance_;
  std::vector<int> mul_;  // row-major order x order
  std::vector<int> inv_;
  std::vector<std::vector<int>> perm_images_;
};

using GroupPtr = std::shared_ptr<Group>;

/// Validate a multiplication table (identity first, Latin square,
/// associativity) and build the group. Associativity is checked exhaustively
/// up to order 2048; larger tables get Light's generator test plus 10^5
/// fixed-seed random triples.
GroupPtr group_from_cayley(const std::vector<std::vector<int>>& table, std::string name,
                           const Config& cfg = default_config());

/// Enumerate the permutation group generated by `generators` on
/// {0,...,degree-1} by breadth-first closure: identity first, then right
/// multiplication by the generators in listed order, deduplicating by image
/// tuple. The discovery order is the canonical element enumeration.
GroupPtr group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                 std::string name, const Config& cfg = default_config());

/// Right-multiplication images of `generators` on the whole group: the degree
/// equals g.order() and generator g maps x to x*g.
std::vector<std::vector<int>> regular_representation(const Group& g,
                                                     const std::vector<int>& generators);

struct DirectProduct {
  GroupPtr group;                            // index of (a, b) is a*|B| + b
  std::vector<int> proj_left, proj_right;    // element -> factor element
  std::vector<int> embed_left, embed_right;  // factor element -> element
};

DirectProduct direct_product(const GroupPtr& a, const GroupPtr& b, std::string name = "",
                             const Config& cfg = default_config());

struct CentralProduct {
  GroupPtr group;
  std::vector<int> embed_left, embed_right;  // factor element -> element
};

/// Quotient of A x B by {(z, phi(z)^{-1})}, where phi (given as pairs
/// (z, phi(z))) is an isomorphism from a central subgroup of A onto a central
/// subgroup of B.
CentralProduct central_product(const GroupPtr& a, const GroupPtr& b,
                               const std::vector<std::pair<int, int>>& phi,
                               std::string name = "", const Config& cfg = default_config());

GroupPtr cyclic_group(int n, const Config& cfg = default_config());

/// Dihedral group of the given (even) order 2n. Elements 0..n-1 are the
/// rotations r^i; element n+i is r^i s. Generators: r = 1, s = n.
GroupPtr dihedral_group(int order, const Config& cfg = default_config());

/// The quaternion group of order 8. Element b*4 + a is i^a j^b;
/// generators: i = 1, j = 4.
GroupPtr quaternion_group(int order = 8);

/// Symmetric group on n letters, enumerated from the generators
/// (0 1) and (0 1 ... n-1).
GroupPtr symmetric_group(int n, const Config& cfg = default_config());

/// (C_p)^k with base-p digit indexing, digitwise addition.
GroupPtr elementary_abelian_group(int p, int k, const Config& cfg = default_config());

/// Dispatch by family name: "cyclic" n, "dihedral" order, "quaternion" 8,
/// "symmetric" n, "elementary-abelian" p k.
GroupPtr builtin_group(const std::string& family, const std::vector<int>& params,
                       const Config& cfg = default_config());

}  // namespace tvl
