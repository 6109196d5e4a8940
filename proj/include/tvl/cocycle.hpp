#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tvl/structure.hpp"
#include "tvl/transversal.hpp"

namespace tvl {

/// Factor set of a central extension 1 -> H -> G -> Gbar -> 1 extracted from
/// a transversal: t_x t_y = gamma(x, y) t_{xy}. Stored normalized (identity
/// row and column trivial) with values as ambient element indices inside H.
struct CocycleTable {
  QuotientMap qmap;  // carries Gbar and the projection
  Subgroup subgroup;
  std::vector<int> values;  // |Gbar|^2, row-major

  int size() const { return qmap.quotient->order(); }
  int value(int xbar, int ybar) const {
    return values[static_cast<size_t>(xbar) * size() + ybar];
  }
};

/// Requires central H. The representative of the coset H is swapped for the
/// identity first, so the table comes out normalized. The cocycle identity
/// gamma(x,y) gamma(xy,z) = gamma(y,z) gamma(x,yz) is verified exhaustively
/// before returning.
CocycleTable cocycle_from_transversal(const Subgroup& h, const std::vector<int>& t);

struct SymmetryReport {
  bool symmetric = false;
  std::optional<std::pair<int, int>> witness;  // first asymmetric commuting pair
};

/// Is gamma symmetric on every commuting pair of Gbar? For central H this is
/// exactly the centralizer condition for (G, H).
SymmetryReport symmetric_on_commuting(const CocycleTable& gamma);

/// lambda applied entrywise to gamma: a 2-cocycle with values in Z/m.
struct TwistedCocycle {
  GroupPtr quotient;
  int modulus = 1;
  std::vector<int> values;

  int size() const { return quotient->order(); }
  int value(int xbar, int ybar) const {
    return values[static_cast<size_t>(xbar) * size() + ybar];
  }
};

TwistedCocycle twist_by_character(const CocycleTable& gamma, const LinearCharacter& lambda);

struct AlphaRegularity {
  std::vector<int> regular_elements;  // sorted elements of Gbar
  int regular_class_count = 0;        // classes consisting of regular elements
};

/// xbar is alpha-regular when alpha(xbar, ybar) = alpha(ybar, xbar) for all
/// ybar centralizing xbar.
AlphaRegularity alpha_regular_elements(const TwistedCocycle& alpha);

/// Whether [lambda o gamma] is trivial in H^2(Gbar, C^x): equivalent to
/// H meet Z(G') <= ker(lambda), independent of any transversal.
bool alpha_class_is_trivial(const Subgroup& h, const LinearCharacter& lambda);

}  // namespace tvl
