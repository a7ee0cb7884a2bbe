#include <algorithm>
#include <cstdlib>
#include <new>
#include <string>

#include "hlt.hpp"
#include "reduce.hpp"
#include "tensordeg/errors.hpp"

namespace tdeg {

namespace detail {

std::uint32_t apply_original(const ReducedEnumeration &r, std::uint32_t coset, Letter l) {
  const Word &e = r.elimination.expansion[static_cast<std::size_t>(std::abs(l)) - 1];
  if (l > 0)
    return r.basis_table.trace(coset, e);
  for (auto it = e.rbegin(); it != e.rend(); ++it)
    coset = r.basis_table.apply(coset, -*it);
  return coset;
}

namespace {

CosetTable run_hlt(std::size_t generator_count, const std::vector<Word> &relators,
                   const EnumerationLimits &limits, std::size_t &defined) {
  HltEnumerator hlt(generator_count, relators, limits);
  try {
    hlt.run({});
  } catch (const ResourceError &e) {
    defined += e.progress();
    throw ResourceError(e.what(), defined);
  } catch (const std::bad_alloc &) {
    defined += hlt.cosets_defined();
    throw ResourceError("coset enumeration ran out of memory", defined);
  }
  defined += hlt.cosets_defined();
  return hlt.standardized(true);
}

// Cosets allowed for a stage that uses only part of the relators.
constexpr std::size_t kStageCosets = std::size_t{1} << 20;
constexpr std::size_t kStageCells = std::size_t{1} << 27;

CosetTable staged_enumeration(std::size_t generator_count, const std::vector<Word> &relators,
                              const EnumerationLimits &limits, std::size_t per_generator) {
  std::size_t defined = 0;
  std::vector<char> used(relators.size(), 0);
  std::vector<Word> subset;
  std::size_t prefix = 0;
  auto extend_prefix = [&](std::size_t upto) {
    for (; prefix < std::min(upto, relators.size()); ++prefix)
      if (!used[prefix]) {
        used[prefix] = 1;
        subset.push_back(relators[prefix]);
      }
  };
  // Start from the shortest relators, making sure every generator is
  // constrained by a few of them.
  std::vector<std::size_t> seen(generator_count, 0);
  for (std::size_t i = 0; i < relators.size(); ++i) {
    bool wanted = i < 256;
    for (Letter l : relators[i])
      if (seen[static_cast<std::size_t>(std::abs(l)) - 1] < per_generator)
        wanted = true;
    if (!wanted)
      continue;
    for (Letter l : relators[i])
      ++seen[static_cast<std::size_t>(std::abs(l)) - 1];
    used[i] = 1;
    subset.push_back(relators[i]);
  }
  prefix = 256;

  for (;;) {
    const bool complete = subset.size() == relators.size();
    EnumerationLimits stage = limits;
    if (!complete) {
      stage.max_cosets = std::min(stage.max_cosets, kStageCosets);
      stage.max_table_cells = std::min(stage.max_table_cells, kStageCells);
    }
    CosetTable ct;
    try {
      ct = run_hlt(generator_count, subset, stage, defined);
    } catch (const ResourceError &) {
      if (complete)
        throw;
      extend_prefix(std::max(4 * prefix, 2 * subset.size()));
      continue;
    }
    std::size_t added = 0;
    for (std::size_t i = 0; i < relators.size(); ++i)
      if (!used[i] && ct.trace(0, relators[i]) != 0) {
        used[i] = 1;
        subset.push_back(relators[i]);
        ++added;
      }
    if (added == 0) {
      ct.cosets_defined = defined;
      return ct;
    }
  }
}

} // namespace

ReducedEnumeration enumerate_reduced(const Presentation &p, const EnumerationLimits &limits,
                                     const ReduceOptions &options) {
  ReducedEnumeration out;
  out.elimination = eliminate_generators(p, options.max_expansion, options.preferred_basis);
  const Elimination &e = out.elimination;

  if (e.basis_count == 0) {
    out.basis_table.generator_count = 0;
    out.basis_table.coset_count = 1;
    out.basis_table.definitions.push_back({0, 0});
  } else if (options.staged) {
    out.basis_table = staged_enumeration(e.basis_count, e.relators, limits, options.seed_per_generator);
  } else {
    std::size_t defined = 0;
    out.basis_table = run_hlt(e.basis_count, e.relators, limits, defined);
  }

  for (const auto &r : p.relators()) {
    std::uint32_t c = 0;
    for (Letter l : r)
      c = apply_original(out, c, l);
    if (c != 0)
      throw InternalError("generator elimination changed the presented group");
  }
  return out;
}

} // namespace detail

namespace {

bool all_empty(std::span<const Word> words) {
  return std::all_of(words.begin(), words.end(), [](const Word &w) { return free_reduce(w).empty(); });
}

CosetTable restandardize(const detail::ReducedEnumeration &r, std::size_t generator_count,
                         const EnumerationLimits &limits) {
  const std::size_t n = r.basis_table.coset_count;
  const std::size_t width = 2 * generator_count;
  if (n > limits.max_cosets || (width > 0 && n > limits.max_table_cells / width))
    throw ResourceError("coset table of " + std::to_string(n) + " cosets over " +
                            std::to_string(generator_count) + " generators exceeds limits",
                        r.basis_table.cosets_defined);

  // Columns over the original alphabet, in basis numbering.
  std::vector<std::uint32_t> raw(n * width);
  for (std::size_t g = 0; g < generator_count; ++g) {
    const Letter l = static_cast<Letter>(g + 1);
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint32_t d = detail::apply_original(r, static_cast<std::uint32_t>(c), l);
      raw[c * width + 2 * g] = d;
      raw[d * width + 2 * g + 1] = static_cast<std::uint32_t>(c);
    }
  }

  CosetTable ct;
  ct.generator_count = generator_count;
  ct.trivial_subgroup = true;
  ct.cosets_defined = r.basis_table.cosets_defined;
  std::vector<std::uint32_t> order{0};
  std::vector<std::uint32_t> number(n, UINT32_MAX);
  number[0] = 0;
  ct.definitions.push_back({0, 0});
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t x = 0; x < width; ++x) {
      const std::uint32_t d = raw[order[i] * width + x];
      if (number[d] == UINT32_MAX) {
        number[d] = static_cast<std::uint32_t>(order.size());
        order.push_back(d);
        ct.definitions.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(x)});
      }
    }
  if (order.size() != n)
    throw InternalError("original generators do not generate the enumerated group");
  ct.coset_count = n;
  ct.action.resize(n * width);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < width; ++x)
      ct.action[i * width + x] = number[raw[order[i] * width + x]];
  return ct;
}

} // namespace

CosetTable coset_enumerate(const Presentation &p, std::span<const Word> subgroup_words,
                           const EnumerationLimits &limits) {
  if (limits.max_cosets == 0 || limits.max_table_cells == 0)
    throw DomainError("enumeration limits must be positive");
  for (const auto &w : subgroup_words)
    p.validate_word(w);

  if (all_empty(subgroup_words)) {
    if (p.generator_count() > 0 && p.relators().empty())
      throw ResourceError("presentation has generators but no relators: the group is infinite", 0);
    return restandardize(detail::enumerate_reduced(p, limits), p.generator_count(), limits);
  }

  std::vector<Word> subgroup;
  for (const auto &w : subgroup_words)
    subgroup.push_back(free_reduce(w));
  detail::HltEnumerator hlt(p.generator_count(), p.relators(), limits);
  hlt.run(subgroup);
  return hlt.standardized(false);
}

} // namespace tdeg
