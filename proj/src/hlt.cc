#include "hlt.hpp"

#include <algorithm>
#include <string>

#include <unistd.h>

#include "tensordeg/errors.hpp"

namespace tdeg::detail {

namespace {

// Table cells allowed by physical memory: growth briefly holds 1.5 tables,
// so keep one table under 40% of RAM.
std::size_t memory_cell_budget() {
  const long pages = sysconf(_SC_PHYS_PAGES);
  const long page_size = sysconf(_SC_PAGESIZE);
  if (pages <= 0 || page_size <= 0)
    return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(pages) * static_cast<std::size_t>(page_size) * 2 / 5 /
         sizeof(std::int32_t);
}

} // namespace

HltEnumerator::HltEnumerator(std::size_t generator_count, const std::vector<Word> &relators,
                             const EnumerationLimits &limits)
    : width_(2 * generator_count) {
  relators_.reserve(relators.size());
  for (const auto &r : relators) {
    std::vector<std::uint32_t> cols;
    cols.reserve(r.size());
    for (Letter l : r)
      cols.push_back(static_cast<std::uint32_t>(column_of(l)));
    max_relator_ = std::max(max_relator_, cols.size());
    relators_.push_back(std::move(cols));
  }
  row_limit_ = limits.max_cosets;
  if (width_ > 0)
    row_limit_ = std::min({row_limit_, limits.max_table_cells / width_, memory_cell_budget() / width_});
  if (row_limit_ == 0)
    throw ResourceError("enumeration limits leave no room for a single coset");

  capacity_ = std::min<std::size_t>(row_limit_, 1024);
  table_.assign(capacity_ * width_, kUndef);
  forward_.resize(capacity_);
  forward_[0] = 0;
  next_ = 1;
  live_ = 1;
}

HltEnumerator::Coset HltEnumerator::rep(Coset c) {
  Coset r = c;
  while (forward_[static_cast<std::size_t>(r)] != r)
    r = forward_[static_cast<std::size_t>(r)];
  while (forward_[static_cast<std::size_t>(c)] != r) {
    const Coset n = forward_[static_cast<std::size_t>(c)];
    forward_[static_cast<std::size_t>(c)] = r;
    c = n;
  }
  return r;
}

void HltEnumerator::merge(Coset a, Coset b) {
  a = rep(a);
  b = rep(b);
  if (a == b)
    return;
  if (a > b)
    std::swap(a, b);
  forward_[static_cast<std::size_t>(b)] = a;
  queue_.push_back(b);
  --live_;
}

void HltEnumerator::coincidence(Coset a, Coset b) {
  queue_.clear();
  merge(a, b);
  for (std::size_t i = 0; i < queue_.size(); ++i) {
    const Coset dead = queue_[i];
    for (std::size_t x = 0; x < width_; ++x) {
      const Coset d = cell(dead, x);
      if (d == kUndef)
        continue;
      const std::size_t xi = inverse_column(x);
      if (cell(d, xi) == dead)
        cell(d, xi) = kUndef;
      const Coset mu = rep(dead);
      const Coset nu = rep(d);
      if (cell(mu, x) != kUndef) {
        merge(nu, cell(mu, x));
      } else if (cell(nu, xi) != kUndef) {
        merge(mu, cell(nu, xi));
      } else {
        cell(mu, x) = nu;
        cell(nu, xi) = mu;
      }
    }
  }
}

HltEnumerator::Coset HltEnumerator::define(Coset c, std::size_t col) {
  const auto n = static_cast<Coset>(next_++);
  forward_[static_cast<std::size_t>(n)] = n;
  ++live_;
  ++defined_;
  cell(c, col) = n;
  cell(n, inverse_column(col)) = c;
  return n;
}

void HltEnumerator::scan_and_fill(Coset c, const std::vector<std::uint32_t> &cols) {
  if (cols.empty())
    return;
  Coset f = c, b = c;
  std::size_t i = 0, j = cols.size(); // unscanned letters are cols[i, j)
  for (;;) {
    while (i < j && cell(f, cols[i]) != kUndef)
      f = cell(f, cols[i++]);
    if (i == j) {
      if (f != b)
        coincidence(f, b);
      return;
    }
    while (j > i && cell(b, inverse_column(cols[j - 1])) != kUndef)
      b = cell(b, inverse_column(cols[--j]));
    if (j == i) {
      coincidence(f, b);
      return;
    }
    if (j == i + 1) {
      cell(f, cols[i]) = b;
      cell(b, inverse_column(cols[i])) = f;
      return;
    }
    define(f, cols[i]);
  }
}

void HltEnumerator::compact(Coset &keep) {
  std::vector<Coset> remap(next_, kUndef);
  Coset n = 0;
  for (std::size_t c = 0; c < next_; ++c)
    if (forward_[c] == static_cast<Coset>(c))
      remap[c] = n++;
  for (std::size_t c = 0; c < next_; ++c) {
    const Coset to = remap[c];
    if (to == kUndef)
      continue;
    for (std::size_t x = 0; x < width_; ++x) {
      const Coset v = table_[c * width_ + x];
      table_[static_cast<std::size_t>(to) * width_ + x] = v == kUndef ? kUndef : remap[static_cast<std::size_t>(v)];
    }
  }
  std::fill(table_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(n) * width_),
            table_.begin() + static_cast<std::ptrdiff_t>(next_ * width_), kUndef);
  for (Coset c = 0; c < n; ++c)
    forward_[static_cast<std::size_t>(c)] = c;
  keep = remap[static_cast<std::size_t>(keep)];
  next_ = static_cast<std::size_t>(n);
}

void HltEnumerator::ensure_room(std::size_t rows, Coset &keep) {
  if (next_ + rows <= capacity_)
    return;
  // Compact when at least a quarter of the used rows are dead.
  if ((next_ - live_) * 4 >= next_)
    compact(keep);
  if (next_ + rows <= capacity_)
    return;
  if (next_ + rows > row_limit_)
    throw ResourceError("coset enumeration exceeded limits after defining " +
                            std::to_string(defined_) + " cosets (" + std::to_string(live_) +
                            " live)",
                        defined_);
  const std::size_t grown = std::min(row_limit_, std::max(capacity_ * 2, next_ + rows));
  table_.resize(grown * width_, kUndef);
  forward_.resize(grown);
  capacity_ = grown;
}

void HltEnumerator::run(const std::vector<Word> &subgroup_words) {
  Coset alpha = 0;
  for (const auto &w : subgroup_words) {
    std::vector<std::uint32_t> cols;
    for (Letter l : w)
      cols.push_back(static_cast<std::uint32_t>(column_of(l)));
    ensure_room(cols.size(), alpha);
    scan_and_fill(0, cols);
  }

  for (; static_cast<std::size_t>(alpha) < next_; ++alpha) {
    for (const auto &r : relators_) {
      if (!alive(alpha))
        break;
      ensure_room(r.size(), alpha);
      scan_and_fill(alpha, r);
    }
    if (!alive(alpha))
      continue;
    ensure_room(width_, alpha);
    for (std::size_t x = 0; x < width_; ++x)
      if (cell(alpha, x) == kUndef)
        define(alpha, x);
  }
}

CosetTable HltEnumerator::standardized(bool trivial_subgroup) const {
  CosetTable ct;
  ct.generator_count = width_ / 2;
  ct.trivial_subgroup = trivial_subgroup;
  ct.cosets_defined = defined_;

  std::vector<Coset> order{0};
  std::vector<std::uint32_t> number(next_, static_cast<std::uint32_t>(-1));
  number[0] = 0;
  ct.definitions.push_back({0, 0});
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t x = 0; x < width_; ++x) {
      const Coset d = cell(order[i], x);
      if (number[static_cast<std::size_t>(d)] == static_cast<std::uint32_t>(-1)) {
        number[static_cast<std::size_t>(d)] = static_cast<std::uint32_t>(order.size());
        order.push_back(d);
        ct.definitions.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(x)});
      }
    }
  ct.coset_count = order.size();
  ct.action.resize(ct.coset_count * width_);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t x = 0; x < width_; ++x)
      ct.action[i * width_ + x] = number[static_cast<std::size_t>(cell(order[i], x))];
  return ct;
}

} // namespace tdeg::detail
