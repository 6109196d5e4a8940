#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tvl/structure.hpp"

namespace tvl {

/// One element per right coset Hg, sorted ascending.
struct Transversal {
  GroupPtr group;
  Subgroup subgroup;
  std::vector<int> members;
};

/// Right cosets Hg of a member set within a universe (defaults to the whole
/// group), labeled by least member, indexed in label order.
struct CosetDecomposition {
  std::vector<int> coset_of;  // universe element -> coset index (-1 outside)
  std::vector<int> reps;      // coset index -> least member
  int count() const { return static_cast<int>(reps.size()); }
};
CosetDecomposition right_cosets(const GroupPtr& g, const std::vector<int>& h_members);
CosetDecomposition right_cosets_within(const GroupPtr& g, const std::vector<int>& h_members,
                                       const std::vector<int>& universe);

bool is_transversal(const Subgroup& h, const std::vector<int>& t);

/// True iff t is closed under conjugation by every element of `conjugators`.
bool is_invariant_under(const GroupPtr& g, const std::vector<int>& t,
                        const std::vector<int>& conjugators);
bool is_invariant_under_group(const GroupPtr& g, const std::vector<int>& t);

/// The least-index representative of each right coset.
Transversal minimal_coset_section(const Subgroup& h);

struct GallagherCounts {
  long long k_group = 0;     // k(G)
  long long k_quotient = 0;  // k(G/H)
  long long k_subgroup = 0;  // k(H)
  bool holds = false;        // k(G) == k(G/H) * k(H)
};

/// Existence conditions for a G-invariant transversal of a normal subgroup:
///  - factorization:   G = H C_G(H)
///  - centralizer:     C_{G/H}(Hg) = H C_G(g)/H for all g
///  - gallagher:       k(G) = k(G/H) k(H), equivalent to the centralizer
///                     condition; computed independently and cross-checked
///  - commutator_free: no non-trivial commutator lies in H (only evaluated
///                     when H is central, where it equals the centralizer
///                     condition)
struct ConditionsVerdict {
  bool factorization_holds = false;
  bool centralizer_condition_holds = false;
  std::optional<int> centralizer_witness;  // least class representative failing
  GallagherCounts gallagher;
  bool exists_invariant = false;
  std::optional<bool> commutator_free;
};

ConditionsVerdict check_conditions(const Subgroup& h);

/// Canonical G-invariant transversal when the conditions hold: pick the
/// least centralizing representative per coset, then per quotient class the
/// least such representative, and return the union of their classes.
/// Verified to be a G-invariant transversal before returning.
Transversal construct_invariant_transversal(const Subgroup& h);

/// T = {c s : c in G', s in S} for a transversal S of the cosets of HG',
/// valid whenever H meets G' trivially (H need not be normal). Verified
/// before returning.
Transversal construct_via_derived(const Subgroup& h, const std::vector<int>& s);
Transversal construct_via_derived(const Subgroup& h);  // S = least-index section of HG'

/// Exhaustive search for an L-invariant transversal, pruned by L-classes:
/// choosing an element forces its entire L-class, so only unions of classes
/// that hit pairwise distinct cosets are explored. Returns the
/// lexicographically least solution (as a sorted member sequence), or
/// nothing. Throws SearchSpaceTooLarge when the node budget is exhausted.
std::optional<Transversal> brute_force_invariant_transversal(
    const Subgroup& h, const std::vector<int>& invariance_members,
    long long cap = default_config().search_cap);

/// Branching-factor estimate for the pruned search: product over cosets of
/// the number of usable L-classes meeting the coset, saturating at 2^62.
long long brute_force_space_estimate(const Subgroup& h,
                                     const std::vector<int>& invariance_members);

/// For normal abelian H: an H-invariant transversal exists iff H is central.
bool h_invariant_exists(const Subgroup& h);

struct CentralizerReduction {
  Subgroup l;  // C_G(H)
  Subgroup z;  // Z(H) = H meet C_G(H)
};

/// Restate the problem for (L, Z) = (C_G(H), Z(H)): a subset T is a
/// G-invariant transversal for G/H iff T lies in L and is an L-invariant
/// transversal for L/Z. Requires G = H C_G(H).
CentralizerReduction reduce_to_centralizer(const Subgroup& h);

struct LoopReport {
  std::vector<int> members;  // normalized transversal, identity included
  std::vector<int> table;    // k x k, entries are positions into members
  bool is_loop_transversal = false;  // transversal for every conjugate of H
  bool has_identity = false;
  bool is_latin = false;
  bool loop_axioms_hold = false;
  bool associative = false;

  int op(int a, int b) const { return table[static_cast<size_t>(a) * members.size() + b]; }
};

/// The binary operation a o b := the unique member of T in the coset H(ab).
/// T is normalized to contain the identity by swapping the H-coset
/// representative first.
LoopReport loop_from_transversal(const Subgroup& h, const std::vector<int>& t);

struct DescentResult {
  Subgroup sylow;                // P
  std::vector<int> transversal;  // P-invariant transversal for Q\P, sorted
  bool q_in_derived = false;     // Q <= P'
};

/// Push a G-invariant transversal for a central H down to a Sylow
/// p-subgroup: {u t} is a G-invariant transversal for Q\G (U the least
/// section of Q\H), and its intersection with P = Syl_p(G) is a P-invariant
/// transversal for Q\P. Also reports whether Q <= P'.
DescentResult descend_to_sylow(const Subgroup& h, const Subgroup& q, int p,
                               const Transversal& t);

struct CounterexampleStatus {
  bool abelian = false;
  bool admits = false;      // exists_invariant from check_conditions
  Subgroup meets_derived;   // H meet G'
  bool is_counterexample = false;  // abelian && admits && |H meet G'| > 1
};

/// Does (G, H) witness an abelian subgroup with a G-invariant transversal
/// meeting the derived subgroup non-trivially? Normal H only.
CounterexampleStatus counterexample_status(const Subgroup& h);

}  // namespace tvl
