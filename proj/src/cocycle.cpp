#include "tvl/cocycle.hpp"

#include <algorithm>
#include <string>

namespace tvl {

CocycleTable cocycle_from_transversal(const Subgroup& h, const std::vector<int>& t) {
  if (!is_central(h)) throw NotCentral("the factor set is defined for central H only");
  if (!is_transversal(h, t)) throw NotATransversal("T does not represent every coset once");
  const GroupPtr& gp = h.parent();
  const Group& g = *gp;

  QuotientMap qm = quotient(gp, h);
  int k = qm.quotient->order();

  // normalized: the H-coset representative is the identity
  std::vector<int> rep(k, -1);
  for (int x : t) rep[qm.projection[x]] = x;
  rep[0] = 0;

  CocycleTable table{std::move(qm), h, std::vector<int>(static_cast<size_t>(k) * k)};
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      int prod = g.mul(rep[x], rep[y]);
      int xy = table.qmap.projection[prod];
      int value = g.mul(prod, g.inv(rep[xy]));
      if (!h.contains(value))
        throw InternalVerificationFailed("factor-set value escapes H");
      table.values[static_cast<size_t>(x) * k + y] = value;
    }

  for (int x = 0; x < k; ++x)
    if (table.value(0, x) != 0 || table.value(x, 0) != 0)
      throw CocycleIdentityFailed("table is not normalized");
  const Group& q = *table.qmap.quotient;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z) {
        int lhs = g.mul(table.value(x, y), table.value(q.mul(x, y), z));
        int rhs = g.mul(table.value(y, z), table.value(x, q.mul(y, z)));
        if (lhs != rhs) throw CocycleIdentityFailed("cocycle identity fails");
      }
  return table;
}

SymmetryReport symmetric_on_commuting(const CocycleTable& gamma) {
  const Group& q = *gamma.qmap.quotient;
  for (int x = 0; x < q.order(); ++x)
    for (int y = 0; y < q.order(); ++y) {
      if (q.mul(x, y) != q.mul(y, x)) continue;
      if (gamma.value(x, y) != gamma.value(y, x))
        return SymmetryReport{false, std::make_pair(x, y)};
    }
  return SymmetryReport{true, std::nullopt};
}

TwistedCocycle twist_by_character(const CocycleTable& gamma, const LinearCharacter& lambda) {
  if (lambda.parent != gamma.subgroup.parent() ||
      lambda.h_members != gamma.subgroup.members())
    throw SubgroupMismatch("the character is not defined on the factor set's subgroup");
  int k = gamma.size();
  TwistedCocycle alpha{gamma.qmap.quotient, lambda.modulus,
                       std::vector<int>(static_cast<size_t>(k) * k)};
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      alpha.values[static_cast<size_t>(x) * k + y] = lambda.exponent_of(gamma.value(x, y));

  const Group& q = *alpha.quotient;
  int m = alpha.modulus;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z) {
        int lhs = (alpha.value(x, y) + alpha.value(q.mul(x, y), z)) % m;
        int rhs = (alpha.value(y, z) + alpha.value(x, q.mul(y, z))) % m;
        if (lhs != rhs)
          throw InternalVerificationFailed("twisted cocycle identity fails");
      }
  return alpha;
}

AlphaRegularity alpha_regular_elements(const TwistedCocycle& alpha) {
  const Group& q = *alpha.quotient;
  AlphaRegularity out;
  std::vector<char> regular(q.order(), 1);
  for (int x = 0; x < q.order(); ++x) {
    for (int y = 0; y < q.order(); ++y) {
      if (q.mul(x, y) != q.mul(y, x)) continue;
      if (alpha.value(x, y) != alpha.value(y, x)) {
        regular[x] = 0;
        break;
      }
    }
    if (regular[x]) out.regular_elements.push_back(x);
  }
  ClassPartition classes = conjugacy_classes(alpha.quotient);
  for (const auto& cls : classes.classes) {
    bool all = std::all_of(cls.begin(), cls.end(), [&](int e) { return regular[e] != 0; });
    if (all) ++out.regular_class_count;
  }
  return out;
}

bool alpha_class_is_trivial(const Subgroup& h, const LinearCharacter& lambda) {
  if (!is_central(h)) throw NotCentral("defined for central H only");
  if (lambda.parent != h.parent() || lambda.h_members != h.members())
    throw SubgroupMismatch("the character is not defined on H");
  const GroupPtr& gp = h.parent();
  Subgroup derived = commutator_subgroup(gp);

  // center of G' as a group: elements of G' commuting with all of G'
  std::vector<int> z_derived;
  for (int x : derived.members()) {
    bool central_in_derived = true;
    for (int y : derived.members())
      if (gp->mul(x, y) != gp->mul(y, x)) {
        central_in_derived = false;
        break;
      }
    if (central_in_derived) z_derived.push_back(x);
  }

  for (int x : z_derived)
    if (h.contains(x) && lambda.exponent_of(x) != 0) return false;
  return true;
}

}  // namespace tvl
