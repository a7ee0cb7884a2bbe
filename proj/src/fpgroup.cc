#include "tensordeg/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <unordered_map>

#include "tensordeg/errors.hpp"

namespace tdeg {

Word free_reduce(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(std::span<const Letter> w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo),
              r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word invert(std::span<const Letter> w) {
  Word out(w.rbegin(), w.rend());
  for (auto &l : out)
    l = -l;
  return out;
}

Presentation::Presentation(std::size_t generator_count, std::vector<Word> relators,
                           std::vector<std::string> generator_labels)
    : generator_count_(generator_count), labels_(std::move(generator_labels)) {
  if (!labels_.empty() && labels_.size() != generator_count_)
    throw DomainError("generator label count does not match generator count");
  relators_.reserve(relators.size());
  for (auto &r : relators) {
    validate_word(r);
    Word red = free_reduce(r);
    if (!red.empty())
      relators_.push_back(std::move(red));
  }
}

void Presentation::validate_word(std::span<const Letter> w) const {
  for (Letter l : w)
    if (l == 0 || static_cast<std::size_t>(std::abs(l)) > generator_count_)
      throw DomainError("letter " + std::to_string(l) + " out of range for " +
                        std::to_string(generator_count_) + " generators");
}

std::string Presentation::generator_label(std::size_t i) const {
  if (i < labels_.size())
    return labels_[i];
  return "x" + std::to_string(i + 1);
}

namespace {

// Recursive-descent parser for the presentation text format.
//   presentation := names '|' [word (',' word)*]
//   word   := factor+
//   factor := ['-'] primary ['^' ['-'] int]
//   primary := name | '(' word ')'
class PresentationParser {
public:
  explicit PresentationParser(std::string_view text) : s_(text) {}

  Presentation parse() {
    std::vector<std::string> names;
    skip_space();
    if (!at_end() && peek() != '|') {
      for (;;) {
        skip_space();
        const std::size_t at = pos_;
        std::string name = identifier();
        if (name.empty())
          fail("expected generator name", at);
        if (index_.count(name))
          fail("duplicate generator name '" + name + "'", at);
        index_[name] = static_cast<Letter>(names.size() + 1);
        names.push_back(std::move(name));
        skip_space();
        if (!at_end() && peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    skip_space();
    if (at_end() || peek() != '|')
      fail("expected '|' after generator list", pos_);
    ++pos_;

    std::vector<Word> relators;
    skip_space();
    if (!at_end()) {
      for (;;) {
        relators.push_back(word());
        skip_space();
        if (at_end())
          break;
        if (peek() != ',')
          fail("expected ',' between relators", pos_);
        ++pos_;
      }
    }
    const std::size_t count = names.size();
    return Presentation(count, std::move(relators), std::move(names));
  }

private:
  [[noreturn]] void fail(const std::string &why, std::size_t at) { throw ParseError(why, at); }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  std::string identifier() {
    std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      return {};
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      fail("expected integer exponent", start);
    if (pos_ - start > 6)
      fail("exponent too large", start);
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Word word() {
    Word w;
    skip_space();
    const std::size_t start = pos_;
    while (true) {
      skip_space();
      if (at_end() || peek() == ',' || peek() == ')')
        break;
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    if (w.empty() && pos_ == start)
      fail("expected relator word", start);
    return w;
  }

  Word factor() {
    skip_space();
    bool negate = false;
    if (!at_end() && peek() == '-') {
      negate = true;
      ++pos_;
      skip_space();
    }
    Word base;
    if (!at_end() && peek() == '(') {
      ++pos_;
      base = word();
      skip_space();
      if (at_end() || peek() != ')')
        fail("expected ')'", pos_);
      ++pos_;
    } else {
      const std::size_t at = pos_;
      const std::string name = identifier();
      if (name.empty())
        fail("expected generator or '('", at);
      auto it = index_.find(name);
      if (it == index_.end())
        fail("unknown generator '" + name + "'", at);
      base = {it->second};
    }
    if (negate)
      base = invert(base);
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      bool neg_exp = false;
      if (!at_end() && peek() == '-') {
        neg_exp = true;
        ++pos_;
      }
      const long e = integer();
      if (neg_exp)
        base = invert(base);
      Word out;
      for (long i = 0; i < e; ++i)
        out.insert(out.end(), base.begin(), base.end());
      return out;
    }
    return base;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, Letter> index_;
};

} // namespace

Presentation parse_presentation(std::string_view text) { return PresentationParser(text).parse(); }

EnumerationLimits limits_from_environment(EnumerationLimits base) {
  auto read = [](const char *name, std::size_t &out) {
    if (const char *v = std::getenv(name)) {
      char *end = nullptr;
      const unsigned long long n = std::strtoull(v, &end, 10);
      if (end != v && *end == '\0' && n > 0)
        out = static_cast<std::size_t>(n);
    }
  };
  read("MAX_COSETS", base.max_cosets);
  read("MAX_TABLE_CELLS", base.max_table_cells);
  return base;
}

Word CosetTable::schreier_word(std::uint32_t coset) const {
  Word w;
  while (coset != 0) {
    const Definition &d = definitions[coset];
    w.push_back(letter_of(d.column));
    coset = d.source;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

RealizedGroup::RealizedGroup(CosetTable table) : table_(std::move(table)) {
  if (!table_.trivial_subgroup)
    throw DomainError("realize: table was not enumerated over the trivial subgroup");
  depth_.assign(table_.coset_count, 0);
  for (std::size_t k = 1; k < table_.coset_count; ++k)
    depth_[k] = depth_[table_.definitions[k].source] + 1;
}

Elem RealizedGroup::mul(Elem a, Elem b) const {
  // Walk b's Schreier path to the root, then replay it from a.
  std::uint32_t path[64];
  std::size_t n = 0;
  std::vector<std::uint32_t> spill;
  for (Elem k = b; k != 0; k = table_.definitions[k].source) {
    if (n < 64)
      path[n++] = table_.definitions[k].column;
    else
      spill.push_back(table_.definitions[k].column);
  }
  Elem r = a;
  for (auto it = spill.rbegin(); it != spill.rend(); ++it)
    r = table_.at(r, *it);
  while (n > 0)
    r = table_.at(r, path[--n]);
  return r;
}

Elem RealizedGroup::inv(Elem a) const {
  // a = 0 * w, so a^-1 = 0 * w^-1; w^-1 walks the path leaf-to-root.
  Elem r = 0;
  for (Elem k = a; k != 0; k = table_.definitions[k].source)
    r = table_.at(r, inverse_column(table_.definitions[k].column));
  return r;
}

Elem RealizedGroup::pow(Elem a, std::size_t k) const {
  Elem r = 0;
  Elem base = a;
  while (k) {
    if (k & 1)
      r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::size_t RealizedGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem y = a; y != 0; y = mul(y, a))
    ++k;
  return k;
}

Subgroup RealizedGroup::generated_by_letters(std::span<const Letter> letters) const {
  std::vector<std::size_t> cols;
  for (Letter l : letters)
    cols.push_back(column_of(l));
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  Subgroup s = Subgroup::trivial(order());
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t c : cols) {
      const Elem y = table_.at(queue[i], c);
      if (s.insert(y))
        queue.push_back(y);
    }
  return s;
}

Subgroup RealizedGroup::generated_by(std::span<const Elem> elems) const {
  std::vector<Elem> gens;
  for (Elem x : elems)
    if (x != 0 && std::find(gens.begin(), gens.end(), x) == gens.end())
      gens.push_back(x);
  Subgroup s = Subgroup::trivial(order());
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Elem x : gens) {
      const Elem y = mul(queue[i], x);
      if (s.insert(y))
        queue.push_back(y);
    }
  return s;
}

bool RealizedGroup::is_abelian() const {
  // Commuting generator images suffice.
  std::vector<Elem> gens;
  for (std::size_t i = 1; i <= table_.generator_count; ++i) {
    const Elem x = generator_image(i);
    if (x != 0)
      gens.push_back(x);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i]))
        return false;
  return true;
}

std::vector<std::uint64_t> RealizedGroup::abelian_invariants() const {
  if (!is_abelian())
    throw DomainError("abelian_invariants: group is not abelian");
  const std::size_t n = order();
  std::vector<std::size_t> orders(n, 0);
  orders[0] = 1;
  for (Elem x = 1; x < n; ++x)
    orders[x] = element_order(x);

  std::vector<std::uint64_t> out;
  for (std::uint64_t p : prime_divisors(n)) {
    std::vector<unsigned> omega{0};
    std::uint64_t pk = 1;
    for (;;) {
      pk *= p;
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
    std::uint64_t q = 1;
    for (unsigned k = 1; k < omega.size(); ++k) {
      q *= p;
      const unsigned at_least_k = omega[k] - omega[k - 1];
      const unsigned at_least_next = k + 1 < omega.size() ? omega[k + 1] - omega[k] : 0;
      for (unsigned i = 0; i < at_least_k - at_least_next; ++i)
        out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroup RealizedGroup::materialize(std::size_t order_cap) const {
  const std::size_t n = order();
  if (n > order_cap)
    throw ResourceError("group of order " + std::to_string(n) +
                        " exceeds the materialization cap " + std::to_string(order_cap));
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    flat[a * n] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const Definition &d = table_.definitions[b];
      flat[a * n + b] = table_.at(flat[a * n + d.source], d.column);
    }
  }
  return FiniteGroup::from_trusted_table(n, std::move(flat));
}

Realization realize(const CosetTable &ct, std::size_t order_cap) {
  RealizedGroup rg(ct);
  Realization r{rg.materialize(order_cap), {}};
  for (std::size_t i = 1; i <= ct.generator_count; ++i)
    r.generator_images.push_back(rg.generator_image(i));
  return r;
}

} // namespace tdeg
