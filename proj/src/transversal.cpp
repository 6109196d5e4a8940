#include "tvl/transversal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace tvl {

CosetDecomposition right_cosets(const GroupPtr& g, const std::vector<int>& h_members) {
  std::vector<int> universe(g->order());
  std::iota(universe.begin(), universe.end(), 0);
  return right_cosets_within(g, h_members, universe);
}

CosetDecomposition right_cosets_within(const GroupPtr& g, const std::vector<int>& h_members,
                                       const std::vector<int>& universe) {
  CosetDecomposition out;
  out.coset_of.assign(g->order(), -1);
  std::vector<char> in_universe(g->order(), 0);
  for (int u : universe) in_universe[u] = 1;
  for (int x : universe) {
    if (out.coset_of[x] >= 0) continue;
    int id = out.count();
    out.reps.push_back(x);  // universe is scanned ascending, so x is least
    for (int m : h_members) {
      int y = g->mul(m, x);
      if (!in_universe[y])
        throw NotASubgroup("coset escapes the universe at " + std::to_string(y));
      out.coset_of[y] = id;
    }
  }
  return out;
}

bool is_transversal(const Subgroup& h, const std::vector<int>& t) {
  const GroupPtr& g = h.parent();
  for (int x : t)
    if (x < 0 || x >= g->order()) return false;
  CosetDecomposition cosets = right_cosets(g, h.members());
  std::vector<char> hit(cosets.count(), 0);
  std::set<int> distinct(t.begin(), t.end());
  if (static_cast<int>(distinct.size()) != cosets.count()) return false;
  for (int x : distinct) {
    int c = cosets.coset_of[x];
    if (hit[c]) return false;
    hit[c] = 1;
  }
  return true;
}

bool is_invariant_under(const GroupPtr& g, const std::vector<int>& t,
                        const std::vector<int>& conjugators) {
  std::vector<char> mask(g->order(), 0);
  for (int x : t) mask[x] = 1;
  for (int x : t)
    for (int c : conjugators)
      if (!mask[g->conjugate(x, c)]) return false;
  return true;
}

bool is_invariant_under_group(const GroupPtr& g, const std::vector<int>& t) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return is_invariant_under(g, t, all);
}

Transversal minimal_coset_section(const Subgroup& h) {
  CosetDecomposition cosets = right_cosets(h.parent(), h.members());
  return Transversal{h.parent(), h, cosets.reps};
}

namespace {

// |C_{G/H}(gbar)| == |C_G(g)| / |C_G(g) meet H|, i.e. the centralizer of the
// coset lifts. The containment >= always holds, so sizes decide equality.
bool centralizer_lifts_at(const Group& g, const Subgroup& h, const QuotientMap& qm, int elem) {
  long long cz = 0, cz_in_h = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (g.mul(x, elem) == g.mul(elem, x)) {
      ++cz;
      if (h.contains(x)) ++cz_in_h;
    }
  }
  const Group& q = *qm.quotient;
  int ebar = qm.projection[elem];
  long long czq = 0;
  for (int xb = 0; xb < q.order(); ++xb)
    if (q.mul(xb, ebar) == q.mul(ebar, xb)) ++czq;
  return czq == cz / cz_in_h;
}

}  // namespace

ConditionsVerdict check_conditions(const Subgroup& h) {
  if (!is_normal(h)) throw NotNormal("the existence conditions require a normal subgroup");
  const GroupPtr& gp = h.parent();
  const Group& g = *gp;
  ConditionsVerdict v;

  // (2): the product set H C_G(H) fills G
  {
    Subgroup c = centralizer(gp, h.members());
    std::vector<char> seen(g.order(), 0);
    long long count = 0;
    for (int a : h.members())
      for (int b : c.members()) {
        int p = g.mul(a, b);
        if (!seen[p]) {
          seen[p] = 1;
          ++count;
        }
      }
    v.factorization_holds = count == g.order();
  }

  QuotientMap qm = quotient(gp, h);
  ClassPartition g_classes = conjugacy_classes(gp);

  // (3): checked on one representative per G-class; both sides transform
  // equivariantly under conjugation of g, so this covers all elements.
  v.centralizer_condition_holds = true;
  for (int rep : g_classes.representatives) {
    if (!centralizer_lifts_at(g, h, qm, rep)) {
      v.centralizer_condition_holds = false;
      v.centralizer_witness = rep;
      break;
    }
  }

  // (4): class counting
  v.gallagher.k_group = g_classes.count();
  v.gallagher.k_quotient = conjugacy_classes(qm.quotient).count();
  v.gallagher.k_subgroup = class_count(h);
  v.gallagher.holds =
      v.gallagher.k_group == v.gallagher.k_quotient * v.gallagher.k_subgroup;

  v.exists_invariant = v.factorization_holds && v.centralizer_condition_holds;

  if (is_central(h)) {
    bool free = true;
    for (int a = 0; a < g.order() && free; ++a)
      for (int b = 0; b < g.order(); ++b) {
        int c = g.commutator(a, b);
        if (c != 0 && h.contains(c)) {
          free = false;
          break;
        }
      }
    v.commutator_free = free;
  }

  // cross-check the verdict invariants
  if (v.gallagher.holds != v.centralizer_condition_holds)
    throw InternalVerificationFailed(
        "class counting disagrees with the centralizer condition on " + g.name());
  if (v.commutator_free && *v.commutator_free != v.centralizer_condition_holds)
    throw InternalVerificationFailed(
        "commutator scan disagrees with the centralizer condition on " + g.name());
  return v;
}

Transversal construct_invariant_transversal(const Subgroup& h) {
  ConditionsVerdict v = check_conditions(h);
  if (!v.exists_invariant) {
    throw ConditionsFail(v.factorization_holds
                             ? "centralizer condition fails"
                             : "factorization G = H C_G(H) fails");
  }
  const GroupPtr& gp = h.parent();
  const Group& g = *gp;

  Subgroup c = centralizer(gp, h.members());
  CosetDecomposition cosets = right_cosets(gp, h.members());

  // least centralizing representative per coset
  std::vector<int> section(cosets.count(), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (!c.contains(x)) continue;
    int& slot = section[cosets.coset_of[x]];
    if (slot < 0) slot = x;
  }
  for (int s : section)
    if (s < 0) throw InternalVerificationFailed("a coset misses the centralizer despite (2)");

  QuotientMap qm = quotient(gp, h);
  ClassPartition q_classes = conjugacy_classes(qm.quotient);

  // least representative-per-quotient-class among the section
  std::vector<int> chosen(q_classes.count(), -1);
  for (int s : section) {
    int cls = q_classes.class_of[qm.projection[s]];
    if (chosen[cls] < 0 || s < chosen[cls]) chosen[cls] = s;
  }
  for (int s : chosen)
    if (s < 0) throw InternalVerificationFailed("a quotient class misses the section");

  ClassPartition g_classes = conjugacy_classes(gp);
  std::vector<int> members;
  for (int s : chosen) {
    const auto& cls = g_classes.classes[g_classes.class_of[s]];
    members.insert(members.end(), cls.begin(), cls.end());
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  if (!is_transversal(h, members) || !is_invariant_under_group(gp, members))
    throw InternalVerificationFailed("constructed set is not an invariant transversal");
  return Transversal{gp, h, std::move(members)};
}

Transversal construct_via_derived(const Subgroup& h, const std::vector<int>& s) {
  const GroupPtr& gp = h.parent();
  const Group& g = *gp;
  Subgroup derived = commutator_subgroup(gp);
  for (int m : h.members())
    if (m != 0 && derived.contains(m))
      throw IntersectionNotTrivial("H meets the derived subgroup at " + std::to_string(m));

  // HG' member set (a subgroup, since G' is normal)
  std::vector<int> hg;
  {
    std::vector<char> seen(g.order(), 0);
    for (int a : h.members())
      for (int b : derived.members()) {
        int p = g.mul(a, b);
        if (!seen[p]) {
          seen[p] = 1;
          hg.push_back(p);
        }
      }
    std::sort(hg.begin(), hg.end());
  }
  if (!is_transversal(Subgroup(gp, hg), s))
    throw NotATransversal("S is not a transversal for the cosets of HG'");

  std::vector<int> members;
  members.reserve(derived.order() * s.size());
  for (int c : derived.members())
    for (int t : s) members.push_back(g.mul(c, t));
  std::sort(members.begin(), members.end());
  auto dup = std::unique(members.begin(), members.end());
  if (dup != members.end() || !is_transversal(h, members) ||
      !is_invariant_under_group(gp, members))
    throw InternalVerificationFailed("derived construction is not an invariant transversal");
  return Transversal{gp, h, std::move(members)};
}

Transversal construct_via_derived(const Subgroup& h) {
  const GroupPtr& gp = h.parent();
  Subgroup derived = commutator_subgroup(gp);
  std::vector<int> seed = h.members();
  seed.insert(seed.end(), derived.members().begin(), derived.members().end());
  Subgroup hg = subgroup_closure(gp, seed);
  return construct_via_derived(h, minimal_coset_section(hg).members);
}

namespace {

// Conjugation orbits of the whole group under a set of conjugators.
ClassPartition orbits_under(const GroupPtr& g, const std::vector<int>& conjugators) {
  int n = g->order();
  ClassPartition part;
  part.class_of.assign(n, -1);
  for (int e = 0; e < n; ++e) {
    if (part.class_of[e] >= 0) continue;
    int id = part.count();
    std::vector<int> members{e};
    part.class_of[e] = id;
    std::vector<int> frontier{e};
    while (!frontier.empty()) {
      int y = frontier.back();
      frontier.pop_back();
      for (int c : conjugators) {
        int z = g->conjugate(y, c);
        if (part.class_of[z] < 0) {
          part.class_of[z] = id;
          members.push_back(z);
          frontier.push_back(z);
        }
      }
    }
    std::sort(members.begin(), members.end());
    part.representatives.push_back(members.front());
    part.classes.push_back(std::move(members));
  }
  return part;
}

struct BruteSearch {
  const Group& g;
  CosetDecomposition cosets;
  ClassPartition orbits;
  std::vector<char> usable;      // orbit hits pairwise distinct cosets
  std::vector<int8_t> state;     // 0 undecided, 1 in, 2 out
  std::vector<char> covered;     // per coset
  std::vector<int> candidates;   // per coset: undecided usable elements
  int covered_count = 0;
  long long nodes = 0;
  long long budget = 0;

  bool dfs(int e) {
    if (++nodes > budget)
      throw SearchSpaceTooLarge("node budget of " + std::to_string(budget) + " exhausted");
    if (covered_count == cosets.count()) return true;
    if (e >= g.order()) return false;
    int cls = orbits.class_of[e];
    if (state[cls] != 0) return dfs(e + 1);

    const auto& members = orbits.classes[cls];
    bool can_include = true;
    for (int m : members)
      if (covered[cosets.coset_of[m]]) {
        can_include = false;
        break;
      }
    if (can_include) {
      state[cls] = 1;
      for (int m : members) covered[cosets.coset_of[m]] = 1;
      covered_count += static_cast<int>(members.size());
      if (dfs(e + 1)) return true;
      state[cls] = 0;
      for (int m : members) covered[cosets.coset_of[m]] = 0;
      covered_count -= static_cast<int>(members.size());
    }

    state[cls] = 2;
    bool dead = false;
    for (int m : members) {
      int c = cosets.coset_of[m];
      if (--candidates[c] == 0 && !covered[c]) dead = true;
    }
    bool found = !dead && dfs(e + 1);
    for (int m : members) ++candidates[cosets.coset_of[m]];
    state[cls] = 0;
    return found;
  }
};

BruteSearch prepare_search(const Subgroup& h, const std::vector<int>& invariance_members) {
  const GroupPtr& gp = h.parent();
  BruteSearch s{*gp,
                right_cosets(gp, h.members()),
                orbits_under(gp, invariance_members),
                {},
                {},
                {},
                {}};
  s.usable.assign(s.orbits.count(), 1);
  for (int cls = 0; cls < s.orbits.count(); ++cls) {
    std::vector<char> seen(s.cosets.count(), 0);
    for (int m : s.orbits.classes[cls]) {
      int c = s.cosets.coset_of[m];
      if (seen[c]) {
        s.usable[cls] = 0;
        break;
      }
      seen[c] = 1;
    }
  }
  s.state.assign(s.orbits.count(), 0);
  for (int cls = 0; cls < s.orbits.count(); ++cls)
    if (!s.usable[cls]) s.state[cls] = 2;
  s.covered.assign(s.cosets.count(), 0);
  s.candidates.assign(s.cosets.count(), 0);
  for (int x = 0; x < s.g.order(); ++x)
    if (s.usable[s.orbits.class_of[x]]) ++s.candidates[s.cosets.coset_of[x]];
  return s;
}

}  // namespace

long long brute_force_space_estimate(const Subgroup& h,
                                     const std::vector<int>& invariance_members) {
  BruteSearch s = prepare_search(h, invariance_members);
  // classes usable per coset, multiplied over cosets
  std::vector<std::set<int>> per_coset(s.cosets.count());
  for (int x = 0; x < s.g.order(); ++x) {
    int cls = s.orbits.class_of[x];
    if (s.usable[cls]) per_coset[s.cosets.coset_of[x]].insert(cls);
  }
  const long long limit = 1ll << 62;
  long long space = 1;
  for (const auto& options : per_coset) {
    long long k = std::max<long long>(1, static_cast<long long>(options.size()));
    if (space > limit / k) return limit;
    space *= k;
  }
  return space;
}

std::optional<Transversal> brute_force_invariant_transversal(
    const Subgroup& h, const std::vector<int>& invariance_members, long long cap) {
  BruteSearch s = prepare_search(h, invariance_members);
  s.budget = cap;
  for (int c = 0; c < s.cosets.count(); ++c)
    if (s.candidates[c] == 0) return std::nullopt;
  if (!s.dfs(0)) return std::nullopt;
  std::vector<int> members;
  for (int cls = 0; cls < s.orbits.count(); ++cls)
    if (s.state[cls] == 1)
      members.insert(members.end(), s.orbits.classes[cls].begin(),
                     s.orbits.classes[cls].end());
  std::sort(members.begin(), members.end());
  return Transversal{h.parent(), h, std::move(members)};
}

bool h_invariant_exists(const Subgroup& h) {
  if (!is_normal(h)) throw NotNormal("H must be normal");
  if (!is_abelian(h)) throw NotAbelian("H must be abelian");
  // equivalent to the existence of an H-invariant transversal
  return is_central(h);
}

CentralizerReduction reduce_to_centralizer(const Subgroup& h) {
  if (!is_normal(h)) throw NotNormal("H must be normal");
  const GroupPtr& gp = h.parent();
  Subgroup l = centralizer(gp, h.members());
  // (2) must hold for the restatement to be equivalent
  {
    std::vector<char> seen(gp->order(), 0);
    long long count = 0;
    for (int a : h.members())
      for (int b : l.members()) {
        int p = gp->mul(a, b);
        if (!seen[p]) {
          seen[p] = 1;
          ++count;
        }
      }
    if (count != gp->order()) throw FactorizationFails("G = H C_G(H) does not hold");
  }
  Subgroup z = intersect(h, l);  // Z(H)
  return CentralizerReduction{std::move(l), std::move(z)};
}

LoopReport loop_from_transversal(const Subgroup& h, const std::vector<int>& t) {
  if (!is_transversal(h, t)) throw NotATransversal("T does not represent every coset once");
  const GroupPtr& gp = h.parent();
  const Group& g = *gp;

  LoopReport report;
  report.members.assign(t.begin(), t.end());
  std::sort(report.members.begin(), report.members.end());
  CosetDecomposition cosets = right_cosets(gp, h.members());
  // normalize: the H-coset representative becomes the identity
  for (int& m : report.members)
    if (cosets.coset_of[m] == cosets.coset_of[0]) m = 0;
  std::sort(report.members.begin(), report.members.end());

  int k = static_cast<int>(report.members.size());
  std::vector<int> rep_of_coset(cosets.count(), -1);
  std::vector<int> pos_of_coset(cosets.count(), -1);
  for (int i = 0; i < k; ++i) {
    rep_of_coset[cosets.coset_of[report.members[i]]] = report.members[i];
    pos_of_coset[cosets.coset_of[report.members[i]]] = i;
  }

  report.table.resize(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int prod = g.mul(report.members[a], report.members[b]);
      report.table[static_cast<size_t>(a) * k + b] = pos_of_coset[cosets.coset_of[prod]];
    }

  // loop transversal: a transversal for the cosets of every conjugate of H
  report.is_loop_transversal = true;
  {
    std::set<std::vector<int>> conjugates;
    for (int x = 0; x < g.order(); ++x) {
      std::vector<int> conj;
      conj.reserve(h.order());
      for (int m : h.members()) conj.push_back(g.conjugate(m, x));
      std::sort(conj.begin(), conj.end());
      conjugates.insert(std::move(conj));
    }
    for (const auto& conj : conjugates) {
      if (!is_transversal(Subgroup(gp, conj), report.members)) {
        report.is_loop_transversal = false;
        break;
      }
    }
  }

  int identity_pos = pos_of_coset[cosets.coset_of[0]];
  report.has_identity = true;
  for (int a = 0; a < k; ++a)
    if (report.op(identity_pos, a) != a || report.op(a, identity_pos) != a) {
      report.has_identity = false;
      break;
    }

  report.is_latin = true;
  for (int a = 0; a < k && report.is_latin; ++a) {
    std::vector<char> row(k, 0), col(k, 0);
    for (int b = 0; b < k; ++b) {
      if (row[report.op(a, b)]++) report.is_latin = false;
      if (col[report.op(b, a)]++) report.is_latin = false;
    }
  }
  report.loop_axioms_hold = report.has_identity && report.is_latin;

  report.associative = true;
  for (int a = 0; a < k && report.associative; ++a)
    for (int b = 0; b < k && report.associative; ++b)
      for (int c = 0; c < k; ++c)
        if (report.op(report.op(a, b), c) != report.op(a, report.op(b, c))) {
          report.associative = false;
          break;
        }
  return report;
}

DescentResult descend_to_sylow(const Subgroup& h, const Subgroup& q, int p,
                               const Transversal& t) {
  const GroupPtr& gp = h.parent();
  const Group& g = *gp;
  if (q.parent() != gp || t.group != gp)
    throw SubgroupMismatch("H, Q and T must live in the same group");

  auto is_prime = [](int v) {
    if (v < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  if (!is_prime(p) || q.order() != p)
    throw NotPrimeOrder("Q must have prime order p");
  for (int m : q.members())
    if (!h.contains(m)) throw NotCentralChain("Q is not contained in H");
  if (!is_central(h)) throw NotCentralChain("H is not central");
  if (!is_transversal(h, t.members) || !is_invariant_under_group(gp, t.members))
    throw NotInvariantTransversal("T is not a G-invariant transversal for G/H");

  // least section U of the Q-cosets inside H, then {u t} represents Q\G
  CosetDecomposition q_in_h = right_cosets_within(gp, q.members(), h.members());
  std::vector<int> down;
  down.reserve(static_cast<size_t>(q_in_h.count()) * t.members.size());
  for (int u : q_in_h.reps)
    for (int x : t.members) down.push_back(g.mul(u, x));
  std::sort(down.begin(), down.end());
  if (!is_transversal(q, down) || !is_invariant_under_group(gp, down))
    throw InternalVerificationFailed("descended set is not a G-invariant transversal");

  DescentResult out{sylow_subgroup(gp, p), {}, false};
  for (int m : q.members())
    if (!out.sylow.contains(m))
      throw InternalVerificationFailed("central Q escapes the Sylow subgroup");

  for (int x : down)
    if (out.sylow.contains(x)) out.transversal.push_back(x);

  // verify: a P-invariant transversal for Q\P
  CosetDecomposition q_in_p = right_cosets_within(gp, q.members(), out.sylow.members());
  {
    std::vector<char> hit(q_in_p.count(), 0);
    bool ok = static_cast<int>(out.transversal.size()) == q_in_p.count();
    for (int x : out.transversal) {
      if (!ok) break;
      int c = q_in_p.coset_of[x];
      if (c < 0 || hit[c]) ok = false;
      else hit[c] = 1;
    }
    if (!ok || !is_invariant_under(gp, out.transversal, out.sylow.members()))
      throw InternalVerificationFailed("descent did not yield a P-invariant transversal");
  }

  SubgroupGroup pg = subgroup_to_group(out.sylow);
  Subgroup p_derived_local = commutator_subgroup(pg.group);
  std::vector<char> p_derived_mask(g.order(), 0);
  for (int loc : p_derived_local.members()) p_derived_mask[pg.to_parent[loc]] = 1;
  out.q_in_derived = true;
  for (int m : q.members())
    if (!p_derived_mask[m]) {
      out.q_in_derived = false;
      break;
    }
  return out;
}

CounterexampleStatus counterexample_status(const Subgroup& h) {
  if (!is_normal(h)) throw NotNormal("counterexample status is evaluated for normal H only");
  ConditionsVerdict v = check_conditions(h);
  Subgroup meets = intersect(h, commutator_subgroup(h.parent()));
  CounterexampleStatus out{is_abelian(h), v.exists_invariant, std::move(meets), false};
  out.is_counterexample = out.abelian && out.admits && out.meets_derived.order() > 1;
  return out;
}

}  // namespace tvl
