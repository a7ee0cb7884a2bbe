#include "tensordeg/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "tensordeg/errors.hpp"

namespace tdeg {

namespace {

constexpr Elem kNone = static_cast<Elem>(-1);

// Identity, inverses and the Latin-square property. Returns the inverse table.
std::vector<Elem> check_table_axioms(std::size_t n, const std::vector<Elem> &t) {
  if (n == 0)
    throw DomainError("group order must be positive");
  if (t.size() != n * n)
    throw DomainError("table size does not match order");

  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i] != i || t[i * n] != i)
      throw DomainError("element 0 is not the identity of the table");
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const Elem v = t[i * n + j];
      if (v >= n || seen[v])
        throw DomainError("table row " + std::to_string(i) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Elem v = t[i * n + j];
      if (seen[v])
        throw DomainError("table column " + std::to_string(j) + " is not a permutation");
      seen[v] = 1;
    }
  }

  std::vector<Elem> inverses(n, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i * n + j] == 0) {
        inverses[i] = static_cast<Elem>(j);
        break;
      }
    }
    if (t[inverses[i] * n + i] != 0)
      throw DomainError("left and right inverses differ for element " + std::to_string(i));
  }
  return inverses;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--)
    r *= base;
  return r;
}

struct PermHash {
  std::size_t operator()(const Permutation &p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace

FiniteGroup FiniteGroup::trivial() {
  return FiniteGroup(1, {0}, {0}, {"e"}, "C1");
}

FiniteGroup FiniteGroup::from_trusted_table(std::size_t order, std::vector<Elem> flat,
                                            std::vector<std::string> labels,
                                            std::string name) {
  auto inverses = check_table_axioms(order, flat);
  if (!labels.empty() && labels.size() != order)
    throw DomainError("label count does not match order");
  return FiniteGroup(order, std::move(flat), std::move(inverses), std::move(labels),
                     std::move(name));
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>> &rows,
                                    std::vector<std::string> labels, std::string name) {
  const std::size_t n = rows.size();
  if (n == 0)
    throw DomainError("group order must be positive");
  if (n > 256)
    throw DomainError("verification not feasible: associativity check is limited to order <= 256");
  for (const auto &r : rows) {
    if (r.size() != n)
      throw DomainError("table is not square");
    for (Elem v : r)
      if (v >= n)
        throw DomainError("table entry out of range");
  }

  // Locate the identity and move it to index 0.
  Elem e = kNone;
  for (std::size_t i = 0; i < n && e == kNone; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = rows[i][j] == j && rows[j][i] == j;
    if (ok)
      e = static_cast<Elem>(i);
  }
  if (e == kNone)
    throw DomainError("table has no identity element");

  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::swap(perm[0], perm[e]); // old index -> new index (an involution)

  std::vector<Elem> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      flat[perm[i] * n + perm[j]] = perm[rows[i][j]];
  if (!labels.empty()) {
    if (labels.size() != n)
      throw DomainError("label count does not match order");
    std::swap(labels[0], labels[e]);
  }

  auto inverses = check_table_axioms(n, flat);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem ab = flat[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (flat[ab * n + c] != flat[a * n + flat[b * n + c]])
          throw DomainError("table is not associative");
    }

  return FiniteGroup(n, std::move(flat), std::move(inverses), std::move(labels),
                     std::move(name));
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (table_[a * order_ + b] != table_[b * order_ + a])
        return false;
  return true;
}

std::string FiniteGroup::label(Elem e) const {
  if (e < labels_.size())
    return labels_[e];
  return std::to_string(e);
}

FiniteGroup from_permutations(std::span<const Permutation> generators, std::size_t order_cap) {
  std::size_t degree = 0;
  for (const auto &p : generators) {
    if (!generators.empty() && p.size() != generators.front().size())
      throw DomainError("generators act on sets of different sizes");
    degree = p.size();
    std::vector<char> hit(degree);
    for (auto v : p) {
      if (v >= degree || hit[v])
        throw DomainError("generator is not a permutation");
      hit[v] = 1;
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);

  std::vector<Permutation> elems{id};
  std::vector<std::string> labels{"e"};
  std::unordered_map<Permutation, Elem, PermHash> index{{id, 0}};
  // right[k][i] = index of elems[i] * generators[k]
  std::vector<std::vector<Elem>> right(generators.size());
  // BFS tree: elems[i] = elems[parent[i]] * generators[via[i]]
  std::vector<Elem> parent{kNone};
  std::vector<std::uint32_t> via{0};

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Permutation prod(degree);
      for (std::size_t pt = 0; pt < degree; ++pt)
        prod[pt] = generators[k][elems[i][pt]];
      auto [it, fresh] = index.try_emplace(prod, static_cast<Elem>(elems.size()));
      if (fresh) {
        if (elems.size() >= order_cap)
          throw ResourceError("permutation group closure exceeds order cap " +
                                  std::to_string(order_cap),
                              elems.size());
        elems.push_back(std::move(prod));
        labels.push_back((i == 0 ? std::string{} : labels[i] + " ") + "g" +
                         std::to_string(k + 1));
        parent.push_back(static_cast<Elem>(i));
        via.push_back(static_cast<std::uint32_t>(k));
      }
      right[k].push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    flat[a * n] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < n; ++b)
      flat[a * n + b] = right[via[b]][flat[a * n + parent[b]]];
  }
  return FiniteGroup::from_trusted_table(n, std::move(flat), std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b, std::size_t order_cap) {
  const std::size_t na = a.order(), nb = b.order();
  if (na * nb > order_cap)
    throw ResourceError("direct product exceeds order cap " + std::to_string(order_cap));
  const std::size_t n = na * nb;
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem p = a.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
      const Elem q = b.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
      flat[x * n + y] = static_cast<Elem>(p * nb + q);
    }
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty()) {
    labels.reserve(n);
    for (std::size_t x = 0; x < n; ++x)
      labels.push_back("(" + a.label(static_cast<Elem>(x / nb)) + "," +
                       b.label(static_cast<Elem>(x % nb)) + ")");
  }
  std::string name;
  if (!a.name().empty() && !b.name().empty())
    name = a.name() + "x" + b.name();
  return FiniteGroup::from_trusted_table(n, std::move(flat), std::move(labels), std::move(name));
}

Quotient quotient(const FiniteGroup &g, const Subgroup &n) {
  if (n.parent_order() != g.order() || !is_subgroup(g, n))
    throw DomainError("quotient: N is not a subgroup of G");
  if (!is_normal(g, n))
    throw DomainError("quotient: N is not normal in G");

  const auto members = n.members();
  std::vector<Elem> proj(g.order(), kNone);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (proj[x] != kNone)
      continue;
    const auto c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : members)
      proj[g.mul(x, m)] = c;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> flat(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      flat[i * q + j] = proj[g.mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Elem r : reps)
      labels.push_back(g.label(r) + "N");
  return {FiniteGroup::from_trusted_table(q, std::move(flat), std::move(labels)),
          std::move(proj)};
}

ConjugacyClasses conjugacy_classes(const FiniteGroup &g) {
  ConjugacyClasses cc;
  const std::size_t n = g.order();
  cc.class_of.assign(n, static_cast<std::uint32_t>(-1));
  for (Elem x = 0; x < n; ++x) {
    if (cc.class_of[x] != static_cast<std::uint32_t>(-1))
      continue;
    const auto k = static_cast<std::uint32_t>(cc.representatives.size());
    cc.representatives.push_back(x);
    std::size_t size = 0;
    for (Elem a = 0; a < n; ++a) {
      const Elem y = g.conj(x, a);
      if (cc.class_of[y] == static_cast<std::uint32_t>(-1)) {
        cc.class_of[y] = k;
        ++size;
      }
    }
    cc.sizes.push_back(size);
  }
  return cc;
}

Subgroup centralizer(const FiniteGroup &g, Elem x) {
  Subgroup s(g.order());
  for (Elem a = 0; a < g.order(); ++a)
    if (g.mul(a, x) == g.mul(x, a))
      s.insert(a);
  return s;
}

Subgroup center(const FiniteGroup &g) {
  Subgroup s(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem x = 0; x < g.order() && central; ++x)
      central = g.mul(a, x) == g.mul(x, a);
    if (central)
      s.insert(a);
  }
  return s;
}

Subgroup generated_subgroup(const FiniteGroup &g, std::span<const Elem> generators) {
  Subgroup s = Subgroup::trivial(g.order());
  std::vector<Elem> gens;
  for (Elem x : generators)
    if (x != 0 && std::find(gens.begin(), gens.end(), x) == gens.end())
      gens.push_back(x);
  // Right multiplication by generators from every found element; finite
  // groups need no inverses for closure.
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Elem x : gens) {
      const Elem y = g.mul(queue[i], x);
      if (s.insert(y))
        queue.push_back(y);
    }
  return s;
}

Subgroup derived_subgroup(const FiniteGroup &g) {
  Subgroup comms(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      comms.insert(g.commutator(x, y));
  const auto gens = comms.members();
  return generated_subgroup(g, gens);
}

Subgroup normal_closure(const FiniteGroup &g, std::span<const Elem> generators) {
  Subgroup conjugates(g.order());
  for (Elem x : generators)
    for (Elem a = 0; a < g.order(); ++a)
      conjugates.insert(g.conj(x, a));
  const auto gens = conjugates.members();
  return generated_subgroup(g, gens);
}

bool is_subgroup(const FiniteGroup &g, const Subgroup &s) {
  if (s.parent_order() != g.order() || !s.contains(0))
    return false;
  if (g.order() % s.size() != 0)
    return false;
  const auto m = s.members();
  for (Elem a : m) {
    if (!s.contains(g.inv(a)))
      return false;
    for (Elem b : m)
      if (!s.contains(g.mul(a, b)))
        return false;
  }
  return true;
}

bool is_normal(const FiniteGroup &g, const Subgroup &s) {
  const auto m = s.members();
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem x : m)
      if (!s.contains(g.conj(x, a)))
        return false;
  return true;
}

std::size_t element_order(const FiniteGroup &g, Elem x) {
  std::size_t k = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x))
    ++k;
  return k;
}

std::size_t exponent(const FiniteGroup &g) {
  std::size_t e = 1;
  for (Elem x = 0; x < g.order(); ++x)
    e = std::lcm(e, element_order(g, x));
  return e;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::uint64_t smallest_prime_divisor(const FiniteGroup &g) {
  if (g.order() == 1)
    throw DomainError("the trivial group has no prime divisor");
  return prime_divisors(g.order()).front();
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup &g) {
  if (!g.is_abelian())
    throw DomainError("abelian_invariants: group is not abelian");

  std::vector<std::size_t> orders(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    orders[x] = element_order(g, x);

  std::vector<std::uint64_t> out;
  for (std::uint64_t p : prime_divisors(g.order())) {
    // omega[k] = log_p |{x : x^(p^k) = 1}|; omega[k] - omega[k-1] counts the
    // cyclic factors of order >= p^k.
    std::vector<unsigned> omega{0};
    for (unsigned k = 1;; ++k) {
      const std::uint64_t pk = ipow(p, k);
      std::size_t count = 0;
      for (std::size_t o : orders)
        if (pk % o == 0)
          ++count;
      unsigned lg = 0;
      for (std::size_t c = count; c > 1; c /= p)
        ++lg;
      if (lg == omega.back())
        break;
      omega.push_back(lg);
    }
    for (unsigned k = 1; k < omega.size(); ++k) {
      const unsigned at_least_k = omega[k] - omega[k - 1];
      const unsigned at_least_next = k + 1 < omega.size() ? omega[k + 1] - omega[k] : 0;
      for (unsigned i = 0; i < at_least_k - at_least_next; ++i)
        out.push_back(ipow(p, k));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json to_json(const FiniteGroup &g) {
  nlohmann::json j;
  j["name"] = g.name();
  j["order"] = g.order();
  auto rows = nlohmann::json::array();
  for (Elem a = 0; a < g.order(); ++a) {
    const auto r = g.row(a);
    rows.push_back(std::vector<Elem>(r.begin(), r.end()));
  }
  j["table"] = std::move(rows);
  j["labels"] = g.labels();
  return j;
}

FiniteGroup group_from_json(const nlohmann::json &j) {
  try {
    auto rows = j.at("table").get<std::vector<std::vector<Elem>>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != rows.size())
      throw DomainError("JSON group: order field disagrees with table");
    std::vector<std::string> labels;
    if (j.contains("labels"))
      labels = j.at("labels").get<std::vector<std::string>>();
    std::string name = j.value("name", std::string{});
    return FiniteGroup::from_table(rows, std::move(labels), std::move(name));
  } catch (const nlohmann::json::exception &e) {
    throw DomainError(std::string("JSON group: ") + e.what());
  }
}

} // namespace tdeg
