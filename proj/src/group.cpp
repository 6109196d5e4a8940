#include "tvl/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_map>

#include "tvl/structure.hpp"

namespace tvl {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::CayleyFile: return "cayley-file";
    case Provenance::PermutationClosure: return "permutation-closure";
    case Provenance::BuiltinFamily: return "builtin-family";
    case Provenance::Product: return "product";
  }
  return "?";
}

Group::Group(std::string name, Provenance prov, int order, std::vector<int> mul,
             std::vector<int> inv, std::vector<std::vector<int>> perm_images)
    : order_(order),
      name_(std::move(name)),
      provenance_(prov),
      mul_(std::move(mul)),
      inv_(std::move(inv)),
      perm_images_(std::move(perm_images)) {}

int Group::power(int g, long long e) const {
  int base = g;
  if (e < 0) {
    base = inv(g);
    e = -e;
  }
  int acc = 0;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int Group::element_order(int g) const {
  int n = 1;
  int x = g;
  while (x != 0) {
    x = mul(x, g);
    ++n;
  }
  return n;
}

long long Group::exponent() const {
  long long e = 1;
  for (int g = 0; g < order_; ++g) e = std::lcm(e, static_cast<long long>(element_order(g)));
  return e;
}

bool Group::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> Group::generating_set() const {
  std::vector<int> gens;
  std::vector<char> closed(order_, 0);
  std::vector<int> members{0};
  closed[0] = 1;
  for (int i = 1; i < order_; ++i) {
    if (closed[i]) continue;
    gens.push_back(i);
    // extend the closure by the new generator
    std::vector<int> frontier{i};
    closed[i] = 1;
    members.push_back(i);
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      size_t known = members.size();
      for (size_t k = 0; k < known; ++k) {
        for (int y : {mul(x, members[k]), mul(members[k], x)}) {
          if (!closed[y]) {
            closed[y] = 1;
            members.push_back(y);
            frontier.push_back(y);
          }
        }
      }
    }
  }
  return gens;
}

namespace {

void check_latin(const std::vector<int>& mul, int n) {
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = mul[static_cast<size_t>(i) * n + j];
      if (seen[v])
        throw NotAGroup("row " + std::to_string(i) + " is not a permutation (value " +
                        std::to_string(v) + " repeats)");
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      int v = mul[static_cast<size_t>(i) * n + j];
      if (seen[v])
        throw NotAGroup("column " + std::to_string(j) + " is not a permutation (value " +
                        std::to_string(v) + " repeats)");
      seen[v] = 1;
    }
  }
}

void check_identity_first(const std::vector<int>& mul, int n) {
  for (int j = 0; j < n; ++j)
    if (mul[j] != j)
      throw IdentityNotFirst("row 0 does not act as the identity at column " +
                             std::to_string(j));
  for (int i = 0; i < n; ++i)
    if (mul[static_cast<size_t>(i) * n] != i)
      throw IdentityNotFirst("column 0 does not act as the identity at row " +
                             std::to_string(i));
}

[[noreturn]] void fail_associativity(int a, int b, int c) {
  std::ostringstream os;
  os << "associativity fails at (" << a << ", " << b << ", " << c << ")";
  throw NotAGroup(os.str());
}

void check_associative_exhaustive(const std::vector<int>& mul, int n) {
  for (int a = 0; a < n; ++a) {
    const int* row_a = mul.data() + static_cast<size_t>(a) * n;
    for (int b = 0; b < n; ++b) {
      const int* row_ab = mul.data() + static_cast<size_t>(row_a[b]) * n;
      const int* row_b = mul.data() + static_cast<size_t>(b) * n;
      for (int c = 0; c < n; ++c)
        if (row_ab[c] != row_a[row_b[c]]) fail_associativity(a, b, c);
    }
  }
}

// Light's test (generators in the middle position) plus fixed-seed samples.
void check_associative_sampled(const std::vector<int>& mul, int n,
                               const std::vector<int>& gens) {
  auto m = [&](int a, int b) { return mul[static_cast<size_t>(a) * n + b]; };
  for (int g : gens)
    for (int a = 0; a < n; ++a) {
      int ag = m(a, g);
      for (int c = 0; c < n; ++c)
        if (m(ag, c) != m(a, m(g, c))) fail_associativity(a, g, c);
    }
  std::mt19937 rng(20240809u);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int trial = 0; trial < 100'000; ++trial) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (m(m(a, b), c) != m(a, m(b, c))) fail_associativity(a, b, c);
  }
}

std::vector<int> derive_inverses(const std::vector<int>& mul, int n) {
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (mul[static_cast<size_t>(i) * n + j] == 0) {
        if (mul[static_cast<size_t>(j) * n + i] != 0)
          throw NotAGroup("one-sided inverse at element " + std::to_string(i));
        inv[i] = j;
        break;
      }
    }
    if (inv[i] < 0) throw NotAGroup("no inverse for element " + std::to_string(i));
  }
  return inv;
}

GroupPtr finish_group(std::string name, Provenance prov, int n, std::vector<int> mul,
                      std::vector<std::vector<int>> images) {
  check_identity_first(mul, n);
  check_latin(mul, n);
  if (n <= 2048) {
    check_associative_exhaustive(mul, n);
  } else {
    Group probe("", prov, n, mul, std::vector<int>(n, 0), {});
    check_associative_sampled(mul, n, probe.generating_set());
  }
  auto inv = derive_inverses(mul, n);
  return std::make_shared<Group>(std::move(name), prov, n, std::move(mul), std::move(inv),
                                 std::move(images));
}

struct ImageHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

GroupPtr group_from_cayley(const std::vector<std::vector<int>>& table, std::string name,
                           const Config& cfg) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty table");
  if (static_cast<long long>(n) > cfg.closure_cap)
    throw ClosureTooLarge("table order " + std::to_string(n) + " exceeds cap");
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw NotAGroup("table is not square at row " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n)
        throw NotAGroup("entry out of range at (" + std::to_string(i) + ", " +
                        std::to_string(j) + ")");
      mul[static_cast<size_t>(i) * n + j] = v;
    }
  }
  return finish_group(std::move(name), Provenance::CayleyFile, n, std::move(mul), {});
}

std::vector<std::vector<int>> regular_representation(const Group& g,
                                                     const std::vector<int>& generators) {
  std::vector<std::vector<int>> images;
  images.reserve(generators.size());
  for (int gen : generators) {
    std::vector<int> img(g.order());
    for (int x = 0; x < g.order(); ++x) img[x] = g.mul(x, gen);
    images.push_back(std::move(img));
  }
  return images;
}

GroupPtr group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                 std::string name, const Config& cfg) {
  if (degree <= 0) throw NotAPermutation("degree must be positive");
  if (generators.empty()) throw NotAPermutation("generator list is empty");
  std::vector<char> seen(degree);
  for (size_t k = 0; k < generators.size(); ++k) {
    const auto& gen = generators[k];
    if (static_cast<int>(gen.size()) != degree)
      throw NotAPermutation("generator " + std::to_string(k) + " has length " +
                            std::to_string(gen.size()) + ", expected " +
                            std::to_string(degree));
    std::fill(seen.begin(), seen.end(), 0);
    for (int v : gen) {
      if (v < 0 || v >= degree || seen[v])
        throw NotAPermutation("generator " + std::to_string(k) +
                              " is not a permutation of 0.." + std::to_string(degree - 1));
      seen[v] = 1;
    }
  }

  auto compose = [degree](const std::vector<int>& p, const std::vector<int>& q) {
    // left-to-right: apply p first, then q
    std::vector<int> r(degree);
    for (int x = 0; x < degree; ++x) r[x] = q[p[x]];
    return r;
  };

  std::vector<std::vector<int>> elems;
  std::unordered_map<std::vector<int>, int, ImageHash> index;
  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  elems.push_back(identity);
  index.emplace(identity, 0);
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : generators) {
      auto next = compose(elems[head], gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<long long>(elems.size()) > cfg.closure_cap)
          throw ClosureTooLarge("closure exceeds cap of " + std::to_string(cfg.closure_cap));
      }
    }
  }

  int n = static_cast<int>(elems.size());
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  return finish_group(std::move(name), Provenance::PermutationClosure, n, std::move(mul),
                      std::move(elems));
}

DirectProduct direct_product(const GroupPtr& a, const GroupPtr& b, std::string name,
                             const Config& cfg) {
  long long n = static_cast<long long>(a->order()) * b->order();
  if (n > cfg.closure_cap) throw ClosureTooLarge("product order exceeds cap");
  int na = a->order(), nb = b->order(), nn = static_cast<int>(n);
  std::vector<int> mul(static_cast<size_t>(nn) * nn);
  for (int i = 0; i < nn; ++i) {
    int ia = i / nb, ib = i % nb;
    for (int j = 0; j < nn; ++j) {
      int ja = j / nb, jb = j % nb;
      mul[static_cast<size_t>(i) * nn + j] = a->mul(ia, ja) * nb + b->mul(ib, jb);
    }
  }
  if (name.empty()) name = a->name() + "x" + b->name();
  DirectProduct out;
  out.group = finish_group(std::move(name), Provenance::Product, nn, std::move(mul), {});
  out.proj_left.resize(nn);
  out.proj_right.resize(nn);
  for (int i = 0; i < nn; ++i) {
    out.proj_left[i] = i / nb;
    out.proj_right[i] = i % nb;
  }
  out.embed_left.resize(na);
  for (int i = 0; i < na; ++i) out.embed_left[i] = i * nb;
  out.embed_right.resize(nb);
  std::iota(out.embed_right.begin(), out.embed_right.end(), 0);
  return out;
}

CentralProduct central_product(const GroupPtr& a, const GroupPtr& b,
                               const std::vector<std::pair<int, int>>& phi, std::string name,
                               const Config& cfg) {
  std::vector<int> domain, image;
  for (auto [z, w] : phi) {
    if (z < 0 || z >= a->order() || w < 0 || w >= b->order())
      throw NotIsomorphism("pair out of range");
    domain.push_back(z);
    image.push_back(w);
  }
  std::sort(domain.begin(), domain.end());
  if (std::adjacent_find(domain.begin(), domain.end()) != domain.end())
    throw NotIsomorphism("map is not injective on the domain");
  std::vector<int> image_sorted = image;
  std::sort(image_sorted.begin(), image_sorted.end());
  if (std::adjacent_find(image_sorted.begin(), image_sorted.end()) != image_sorted.end())
    throw NotIsomorphism("map is not injective");

  auto phi_of = [&phi](int z) {
    for (auto [x, y] : phi)
      if (x == z) return y;
    throw NotIsomorphism("domain is not closed under multiplication");
  };

  // domain must be a central subgroup of A, image central in B, phi a homomorphism
  for (int z : domain)
    for (int x = 0; x < a->order(); ++x)
      if (a->mul(z, x) != a->mul(x, z)) throw NotCentral("domain element " + std::to_string(z) + " is not central");
  for (int w : image_sorted)
    for (int x = 0; x < b->order(); ++x)
      if (b->mul(w, x) != b->mul(x, w)) throw NotCentral("image element " + std::to_string(w) + " is not central");
  if (std::find(domain.begin(), domain.end(), 0) == domain.end())
    throw NotIsomorphism("domain does not contain the identity");
  for (int z1 : domain)
    for (int z2 : domain) {
      int z = a->mul(z1, z2);
      if (!std::binary_search(domain.begin(), domain.end(), z))
        throw NotIsomorphism("domain is not closed under multiplication");
      if (phi_of(z) != b->mul(phi_of(z1), phi_of(z2)))
        throw NotIsomorphism("map is not a homomorphism");
    }

  DirectProduct prod = direct_product(a, b, a->name() + "x" + b->name(), cfg);
  std::vector<int> kernel_members;
  for (int z : domain)
    kernel_members.push_back(
        prod.group->mul(prod.embed_left[z], prod.embed_right[b->inv(phi_of(z))]));
  std::sort(kernel_members.begin(), kernel_members.end());
  Subgroup kernel(prod.group, kernel_members);
  QuotientMap q = quotient(prod.group, kernel);

  if (name.empty()) name = a->name() + "o" + b->name();
  CentralProduct out;
  // rebuild under the requested name, revalidating the table
  int nn = q.quotient->order();
  out.group = finish_group(std::move(name), Provenance::Product, nn,
                           q.quotient->mul_table(), {});
  out.embed_left.resize(a->order());
  for (int i = 0; i < a->order(); ++i) out.embed_left[i] = q.projection[prod.embed_left[i]];
  out.embed_right.resize(b->order());
  for (int i = 0; i < b->order(); ++i) out.embed_right[i] = q.projection[prod.embed_right[i]];
  return out;
}

GroupPtr cyclic_group(int n, const Config& cfg) {
  if (n < 1) throw UnsupportedParameter("cyclic order must be positive");
  if (static_cast<long long>(n) > cfg.closure_cap) throw UnsupportedParameter("order exceeds cap");
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[static_cast<size_t>(i) * n + j] = (i + j) % n;
  return finish_group("C" + std::to_string(n), Provenance::BuiltinFamily, n, std::move(mul), {});
}

GroupPtr dihedral_group(int order, const Config& cfg) {
  if (order < 2 || order % 2 != 0)
    throw UnsupportedParameter("dihedral order must be even and at least 2");
  if (static_cast<long long>(order) > cfg.closure_cap)
    throw UnsupportedParameter("order exceeds cap");
  int n = order / 2;
  auto idx = [n](int rot, int flip) { return flip * n + rot; };
  std::vector<int> mul(static_cast<size_t>(order) * order);
  for (int a = 0; a < n; ++a)
    for (int e = 0; e < 2; ++e)
      for (int b = 0; b < n; ++b)
        for (int f = 0; f < 2; ++f) {
          int rot = e == 0 ? (a + b) % n : ((a - b) % n + n) % n;
          mul[static_cast<size_t>(idx(a, e)) * order + idx(b, f)] = idx(rot, e ^ f);
        }
  return finish_group("D" + std::to_string(order), Provenance::BuiltinFamily, order,
                      std::move(mul), {});
}

GroupPtr quaternion_group(int order) {
  if (order != 8) throw UnsupportedParameter("only the order-8 quaternion group is built in");
  // element b*4 + a is i^a j^b; j^2 = i^2, j^{-1} i j = i^{-1}
  auto idx = [](int a, int b) { return b * 4 + a; };
  std::vector<int> mul(64);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 2; ++d) {
          int ia = b == 0 ? (a + c) % 4 : ((a - c) % 4 + 4) % 4;
          if (b == 1 && d == 1) ia = (ia + 2) % 4;
          mul[static_cast<size_t>(idx(a, b)) * 8 + idx(c, d)] = idx(ia, (b + d) % 2);
        }
  return finish_group("Q8", Provenance::BuiltinFamily, 8, std::move(mul), {});
}

GroupPtr symmetric_group(int n, const Config& cfg) {
  if (n < 1) throw UnsupportedParameter("symmetric degree must be positive");
  long long order = 1;
  for (int i = 2; i <= n; ++i) {
    order *= i;
    if (order > cfg.closure_cap) throw UnsupportedParameter("n! exceeds cap");
  }
  std::vector<std::vector<int>> gens;
  if (n == 1) {
    gens.push_back({0});
  } else {
    std::vector<int> swap01(n), cycle(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens.push_back(swap01);
    gens.push_back(cycle);
  }
  auto g = group_from_permutations(n, gens, "S" + std::to_string(n), cfg);
  return finish_group(g->name(), Provenance::BuiltinFamily, g->order(), g->mul_table(),
                      g->perm_images());
}

GroupPtr elementary_abelian_group(int p, int k, const Config& cfg) {
  auto is_prime = [](int v) {
    if (v < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  if (!is_prime(p)) throw UnsupportedParameter("p must be prime");
  if (k < 1) throw UnsupportedParameter("exponent k must be positive");
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > cfg.closure_cap) throw UnsupportedParameter("p^k exceeds cap");
  }
  int nn = static_cast<int>(n);
  std::vector<int> mul(static_cast<size_t>(nn) * nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) {
      int v = 0, base = 1, x = i, y = j;
      for (int d = 0; d < k; ++d) {
        v += ((x % p) + (y % p)) % p * base;
        x /= p;
        y /= p;
        base *= p;
      }
      mul[static_cast<size_t>(i) * nn + j] = v;
    }
  return finish_group("C" + std::to_string(p) + "^" + std::to_string(k),
                      Provenance::BuiltinFamily, nn, std::move(mul), {});
}

GroupPtr builtin_group(const std::string& family, const std::vector<int>& params,
                       const Config& cfg) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw UnsupportedParameter("family '" + family + "' expects " + std::to_string(k) +
                                 " parameter(s)");
  };
  if (family == "cyclic") {
    want(1);
    return cyclic_group(params[0], cfg);
  }
  if (family == "dihedral") {
    want(1);
    return dihedral_group(params[0], cfg);
  }
  if (family == "quaternion") {
    want(1);
    return quaternion_group(params[0]);
  }
  if (family == "symmetric") {
    want(1);
    return symmetric_group(params[0], cfg);
  }
  if (family == "elementary-abelian") {
    want(2);
    return elementary_abelian_group(params[0], params[1], cfg);
  }
  throw UnsupportedParameter("unknown family '" + family + "'");
}

}  // namespace tvl
