#include "tietze.hpp"

#include <algorithm>
#include <unordered_set>

namespace tdeg::detail {

namespace {

struct WordHash {
  std::size_t operator()(const Word &w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(l));
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Booth's algorithm: start index of the lexicographically least rotation.
std::size_t least_rotation(const Word &s) {
  const std::size_t n = s.size();
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter sj = s[j % n];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n])
        k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n])
        k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

Word rotated(const Word &w, std::size_t k) {
  Word out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

void append_expansion(Word &out, Letter l, const std::vector<Word> &expansion) {
  const Word &e = expansion[static_cast<std::size_t>(std::abs(l)) - 1];
  if (l > 0) {
    out.insert(out.end(), e.begin(), e.end());
  } else {
    for (auto it = e.rbegin(); it != e.rend(); ++it)
      out.push_back(-*it);
  }
}

} // namespace

Word canonical_cyclic(const Word &w) {
  if (w.empty())
    return w;
  Word a = rotated(w, least_rotation(w));
  const Word wi = invert(w);
  Word b = rotated(wi, least_rotation(wi));
  return std::min(a, b);
}

Elimination eliminate_generators(const Presentation &p, std::size_t max_expansion,
                                 std::span<const std::uint32_t> preferred) {
  const std::size_t g = p.generator_count();
  Elimination e;
  e.basis_index.assign(g, -1);
  e.definition.resize(g);
  e.expansion.resize(g);

  std::vector<Word> rels;
  rels.reserve(p.relators().size());
  for (const auto &r : p.relators()) {
    Word c = cyclic_reduce(r);
    if (!c.empty())
      rels.push_back(std::move(c));
  }

  std::vector<char> known(g, 0);
  std::vector<std::uint32_t> unknown(rels.size());
  std::vector<std::vector<std::uint32_t>> occurs(g);
  for (std::size_t r = 0; r < rels.size(); ++r) {
    unknown[r] = static_cast<std::uint32_t>(rels[r].size());
    for (Letter l : rels[r])
      occurs[static_cast<std::size_t>(std::abs(l)) - 1].push_back(static_cast<std::uint32_t>(r));
  }

  std::vector<std::uint32_t> queue;
  for (std::size_t r = 0; r < rels.size(); ++r)
    if (unknown[r] == 1)
      queue.push_back(static_cast<std::uint32_t>(r));

  std::size_t known_count = 0;
  auto mark_known = [&](std::size_t gen) {
    known[gen] = 1;
    ++known_count;
    for (std::uint32_t r : occurs[gen])
      if (--unknown[r] == 1)
        queue.push_back(r);
  };

  auto solve = [&](std::uint32_t r) {
    const Word &w = rels[r];
    std::size_t pos = w.size();
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!known[static_cast<std::size_t>(std::abs(w[i])) - 1])
        pos = i;
    const Letter l = w[pos];
    const auto gen = static_cast<std::size_t>(std::abs(l)) - 1;
    const Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    const Word v(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
    Word def;
    if (l > 0) {
      def = invert(u);
      const Word vi = invert(v);
      def.insert(def.end(), vi.begin(), vi.end());
    } else {
      def = v;
      def.insert(def.end(), u.begin(), u.end());
    }
    Word exp;
    for (Letter d : def)
      append_expansion(exp, d, e.expansion);
    exp = free_reduce(exp);
    if (exp.size() > max_expansion)
      return;
    e.definition[gen] = std::move(def);
    e.expansion[gen] = std::move(exp);
    e.order.push_back(static_cast<std::uint32_t>(gen));
    mark_known(gen);
  };

  for (std::uint32_t gen : preferred) {
    if (known[gen])
      continue;
    e.basis_index[gen] = static_cast<std::int32_t>(e.basis_count++);
    e.expansion[gen] = Word{static_cast<Letter>(e.basis_count)};
    mark_known(gen);
  }

  while (known_count < g) {
    while (!queue.empty()) {
      const std::uint32_t r = queue.back();
      queue.pop_back();
      if (unknown[r] == 1)
        solve(r);
    }
    if (known_count == g)
      break;

    // Stalled: promote the unknown generator that would unlock the most
    // relators (those with exactly two unknown letters).
    std::vector<std::uint32_t> score(g, 0);
    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (unknown[r] != 2)
        continue;
      for (Letter l : rels[r]) {
        const auto gen = static_cast<std::size_t>(std::abs(l)) - 1;
        if (!known[gen])
          ++score[gen];
      }
    }
    std::size_t best = g;
    for (std::size_t gen = 0; gen < g; ++gen)
      if (!known[gen] && (best == g || score[gen] > score[best]))
        best = gen;
    e.basis_index[best] = static_cast<std::int32_t>(e.basis_count++);
    e.expansion[best] = Word{static_cast<Letter>(e.basis_count)};
    mark_known(best);
  }

  std::unordered_set<Word, WordHash> seen;
  Word buf;
  for (const auto &r : rels) {
    buf.clear();
    for (Letter l : r)
      append_expansion(buf, l, e.expansion);
    Word c = cyclic_reduce(buf);
    if (c.empty())
      continue;
    seen.insert(canonical_cyclic(c));
  }
  e.relators.assign(seen.begin(), seen.end());
  std::sort(e.relators.begin(), e.relators.end(), [](const Word &a, const Word &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return e;
}

} // namespace tdeg::detail
