#include "tvl/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace tvl {

namespace {

// BFS closure of a seed set inside g; returns sorted members.
std::vector<int> closure_members(const Group& g, const std::vector<int>& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  std::vector<int> frontier;
  for (int s : seed) {
    if (s < 0 || s >= g.order()) throw NotASubgroup("seed element out of range");
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
      frontier.push_back(s);
    }
  }
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    size_t known = members.size();
    for (size_t k = 0; k < known; ++k) {
      for (int y : {g.mul(x, members[k]), g.mul(members[k], x)}) {
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
          frontier.push_back(y);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_) throw NotASubgroup("null parent group");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw NotASubgroup("a subgroup cannot be empty");
  int n = parent_->order();
  if (members_.front() < 0 || members_.back() >= n)
    throw NotASubgroup("member index out of range");
  mask_.assign(n, 0);
  for (int m : members_) mask_[m] = 1;
  if (!mask_[0]) throw NotASubgroup("missing the identity");
  for (int a : members_)
    for (int b : members_)
      if (!mask_[parent_->mul(a, b)])
        throw NotASubgroup("not closed under multiplication: " + std::to_string(a) + "*" +
                           std::to_string(b) + " escapes");
  if (n % order() != 0)
    throw NotASubgroup("order does not divide the group order");  // unreachable for closed sets
}

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<int>& seed) {
  return Subgroup(g, closure_members(*g, seed));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  Subgroup h(g, all);
  return h;
}

Subgroup centralizer(const GroupPtr& g, int target) {
  return centralizer(g, std::vector<int>{target});
}

Subgroup centralizer(const GroupPtr& g, const std::vector<int>& targets) {
  std::vector<int> members;
  for (int x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (int t : targets)
      if (g->mul(x, t) != g->mul(t, x)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return Subgroup(g, std::move(members));
}

Subgroup normalizer(const GroupPtr& g, const std::vector<int>& members) {
  std::vector<char> mask(g->order(), 0);
  for (int m : members) mask[m] = 1;
  std::vector<int> result;
  for (int x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (int m : members)
      if (!mask[g->conjugate(m, x)]) {
        ok = false;
        break;
      }
    if (ok) result.push_back(x);
  }
  return Subgroup(g, std::move(result));
}

Subgroup center(const GroupPtr& g) {
  std::vector<int> members;
  for (int x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (int y = 0; y < g->order(); ++y)
      if (g->mul(x, y) != g->mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  Subgroup z(g, std::move(members));
  z.normal_ = TriState::Yes;
  z.abelian_ = TriState::Yes;
  z.central_ = TriState::Yes;
  return z;
}

Subgroup commutator_subgroup(const GroupPtr& g) {
  std::vector<char> seen(g->order(), 0);
  std::vector<int> comms;
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b) {
      int c = g->commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  Subgroup d(g, closure_members(*g, comms));
  d.normal_ = TriState::Yes;
  return d;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw SubgroupMismatch("subgroups of different groups");
  std::vector<int> members;
  for (int m : a.members())
    if (b.contains(m)) members.push_back(m);
  return Subgroup(a.parent(), std::move(members));
}

bool is_normal(const Subgroup& h) {
  if (h.normal_ != TriState::Unknown) return h.normal_ == TriState::Yes;
  const Group& g = *h.parent();
  for (int x = 0; x < g.order(); ++x)
    for (int m : h.members())
      if (!h.contains(g.conjugate(m, x))) {
        h.normal_ = TriState::No;
        return false;
      }
  h.normal_ = TriState::Yes;
  return true;
}

bool is_abelian(const Subgroup& h) {
  if (h.abelian_ != TriState::Unknown) return h.abelian_ == TriState::Yes;
  const Group& g = *h.parent();
  for (int a : h.members())
    for (int b : h.members())
      if (g.mul(a, b) != g.mul(b, a)) {
        h.abelian_ = TriState::No;
        return false;
      }
  h.abelian_ = TriState::Yes;
  return true;
}

bool is_central(const Subgroup& h) {
  if (h.central_ != TriState::Unknown) return h.central_ == TriState::Yes;
  const Group& g = *h.parent();
  for (int m : h.members())
    for (int x = 0; x < g.order(); ++x)
      if (g.mul(m, x) != g.mul(x, m)) {
        h.central_ = TriState::No;
        return false;
      }
  h.central_ = TriState::Yes;
  if (h.abelian_ == TriState::Unknown) h.abelian_ = TriState::Yes;
  if (h.normal_ == TriState::Unknown) h.normal_ = TriState::Yes;
  return true;
}

ClassPartition conjugacy_classes(const GroupPtr& g) {
  int n = g->order();
  ClassPartition part;
  part.class_of.assign(n, -1);
  for (int e = 0; e < n; ++e) {
    if (part.class_of[e] >= 0) continue;
    int id = part.count();
    std::vector<int> members;
    // orbit of e under conjugation
    std::vector<int> frontier{e};
    part.class_of[e] = id;
    members.push_back(e);
    while (!frontier.empty()) {
      int y = frontier.back();
      frontier.pop_back();
      for (int x = 0; x < n; ++x) {
        int z = g->conjugate(y, x);
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

QuotientMap quotient(const GroupPtr& g, const Subgroup& h) {
  if (!is_normal(h)) throw NotNormal("quotient requires a normal subgroup");
  int n = g->order();
  std::vector<int> label(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (label[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);  // x is the least member of its coset
    for (int m : h.members()) label[g->mul(m, x)] = id;
  }
  int q = static_cast<int>(reps.size());
  std::vector<int> mul(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      mul[static_cast<size_t>(i) * q + j] = label[g->mul(reps[i], reps[j])];
  auto table = [&] {
    std::vector<std::vector<int>> t(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) t[i][j] = mul[static_cast<size_t>(i) * q + j];
    return t;
  }();
  GroupPtr qg = group_from_cayley(table, g->name() + "/H" + std::to_string(h.order()));

  QuotientMap out{g, h, qg, std::move(label), std::move(reps)};
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g, const Config& cfg) {
  ClassPartition classes = conjugacy_classes(g);
  if (classes.count() > cfg.class_cap)
    throw TooManyClasses("k(G) = " + std::to_string(classes.count()) + " exceeds the lattice cap");

  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> list;
  auto add = [&](std::vector<int> members) {
    if (found.insert(members).second) list.push_back(std::move(members));
  };
  add({0});
  {
    std::vector<int> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    add(std::move(all));
  }
  for (const auto& cls : classes.classes) add(closure_members(*g, cls));

  // close under pairwise join
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      const auto& a = list[i];
      const auto& b = list[j];
      if (std::includes(a.begin(), a.end(), b.begin(), b.end())) continue;
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) continue;
      std::vector<int> seed;
      seed.reserve(a.size() + b.size());
      seed.insert(seed.end(), a.begin(), a.end());
      seed.insert(seed.end(), b.begin(), b.end());
      add(closure_members(*g, seed));
    }

  std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(list.size());
  for (auto& members : list) {
    Subgroup h(g, std::move(members));
    h.normal_ = TriState::Yes;
    out.push_back(std::move(h));
  }
  return out;
}

Subgroup sylow_subgroup(const GroupPtr& g, int p) {
  auto is_prime = [](int v) {
    if (v < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
  long long target = 1;
  {
    long long n = g->order();
    while (n % p == 0) {
      n /= p;
      target *= p;
    }
  }
  std::vector<int> members{0};
  while (static_cast<long long>(members.size()) < target) {
    Subgroup current(g, members);
    Subgroup norm = normalizer(g, current.members());
    bool extended = false;
    for (int x : norm.members()) {
      if (current.contains(x)) continue;
      if (!current.contains(g->power(x, p))) continue;
      std::vector<int> seed = members;
      seed.push_back(x);
      members = closure_members(*g, seed);
      extended = true;
      break;
    }
    if (!extended)
      throw InternalVerificationFailed("sylow growth stalled below the full p-part");
  }
  return Subgroup(g, members);
}

SubgroupGroup subgroup_to_group(const Subgroup& h, const Config& cfg) {
  (void)cfg;
  const Group& g = *h.parent();
  int k = h.order();
  std::vector<int> to_local(g.order(), -1);
  for (int i = 0; i < k; ++i) to_local[h.members()[i]] = i;
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[i][j] = to_local[g.mul(h.members()[i], h.members()[j])];
  SubgroupGroup out;
  out.group = group_from_cayley(table, g.name() + "[" + std::to_string(k) + "]");
  out.to_parent = h.members();
  return out;
}

int class_count(const Subgroup& h) {
  if (h.is_whole_group()) return conjugacy_classes(h.parent()).count();
  if (is_abelian(h)) return h.order();
  return conjugacy_classes(subgroup_to_group(h).group).count();
}

int LinearCharacter::exponent_of(int ambient) const {
  auto it = std::lower_bound(h_members.begin(), h_members.end(), ambient);
  if (it == h_members.end() || *it != ambient)
    throw SubgroupMismatch("element " + std::to_string(ambient) + " is not in H");
  return exponents[static_cast<size_t>(it - h_members.begin())];
}

bool LinearCharacter::is_faithful() const {
  for (size_t i = 1; i < exponents.size(); ++i)
    if (exponents[i] == 0) return false;
  return true;
}

std::vector<int> LinearCharacter::kernel_members() const {
  std::vector<int> out;
  for (size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] == 0) out.push_back(h_members[i]);
  return out;
}

namespace {

// Basis of a finite abelian group: elements whose cyclic spans form an
// internal direct product. Greedy: split off a least-index element of
// maximal order, recurse on the quotient, and straighten the lifts so their
// orders match their images.
std::vector<std::pair<int, int>> abelian_basis(const GroupPtr& a) {
  if (a->order() == 1) return {};
  int best = 1, best_ord = a->element_order(1);
  for (int e = 2; e < a->order(); ++e) {
    int ord = a->element_order(e);
    if (ord > best_ord) {
      best = e;
      best_ord = ord;
    }
  }
  Subgroup span = subgroup_closure(a, {best});
  QuotientMap qm = quotient(a, span);
  std::vector<std::pair<int, int>> out{{best, best_ord}};
  for (auto [qb, qord] : abelian_basis(qm.quotient)) {
    int lift = qm.section[qb];
    int excess = a->power(lift, qord);  // lands in <best>
    int c = 0, pw = 0;
    while (pw != excess) {
      pw = a->mul(pw, best);
      ++c;
      if (c > best_ord) throw InternalVerificationFailed("lift does not land in the span");
    }
    if (c % qord != 0)
      throw InternalVerificationFailed("basis lift cannot be straightened");
    int adjusted = a->mul(lift, a->power(best, best_ord - (c / qord) % best_ord));
    if (a->element_order(adjusted) != qord)
      throw InternalVerificationFailed("straightened lift has the wrong order");
    out.emplace_back(adjusted, qord);
  }
  return out;
}

}  // namespace

std::vector<LinearCharacter> linear_characters(const Subgroup& h, const Config& cfg) {
  if (!is_abelian(h)) throw NotAbelian("characters are built for abelian subgroups only");
  SubgroupGroup sg = subgroup_to_group(h, cfg);
  auto basis = abelian_basis(sg.group);
  int k = h.order();
  int m = basis.empty() ? 1 : basis[0].second;  // the exponent of H

  // coordinates of every element in the basis decomposition
  size_t r = basis.size();
  std::vector<std::vector<int>> coord(k);
  {
    std::vector<int> digits(r, 0);
    int elem = 0;
    std::vector<char> hit(k, 0);
    for (int count = 0;; ++count) {
      if (hit[elem]) throw InternalVerificationFailed("abelian basis is not direct");
      hit[elem] = 1;
      coord[elem] = digits;
      if (count + 1 >= k) break;
      // odometer, last digit fastest; multiply incrementally
      size_t d = r;
      while (d > 0) {
        --d;
        digits[d]++;
        elem = sg.group->mul(elem, basis[d].first);
        if (digits[d] < basis[d].second) break;
        // roll over: subtract the full cycle
        digits[d] = 0;
      }
    }
  }

  std::vector<LinearCharacter> out;
  out.reserve(k);
  std::vector<int> coeff(r, 0);
  for (int idx = 0; idx < k; ++idx) {
    LinearCharacter chi;
    chi.parent = h.parent();
    chi.h_members = h.members();
    chi.modulus = m;
    chi.exponents.resize(k);
    for (int e = 0; e < k; ++e) {
      long long v = 0;
      for (size_t d = 0; d < r; ++d)
        v += static_cast<long long>(coeff[d]) * coord[e][d] * (m / basis[d].second);
      chi.exponents[e] = static_cast<int>(v % m);
    }
    out.push_back(std::move(chi));
    // next coefficient tuple, last digit fastest
    size_t d = r;
    while (d > 0) {
      --d;
      if (++coeff[d] < basis[d].second) break;
      coeff[d] = 0;
    }
  }
  return out;
}

}  // namespace tvl
