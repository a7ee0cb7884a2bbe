#include "tensordeg/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <map>

#include "tensordeg/errors.hpp"
#include "tensordeg/fpgroup.hpp"

namespace tdeg {

namespace {

bool is_power_of_two(std::uint64_t n) { return n && !(n & (n - 1)); }

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

class SpecParser {
public:
  explicit SpecParser(std::string_view text) {
    // Whitespace is insignificant; keep original offsets for error messages.
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        s_.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(text[i]))));
        offset_.push_back(i);
      }
    offset_.push_back(text.size());
  }

  GroupSpec parse() {
    GroupSpec spec;
    if (s_.empty())
      fail("empty group specification");
    spec.factors.push_back(atom());
    while (pos_ < s_.size()) {
      if (s_[pos_] != 'X')
        fail("expected 'x' between factors");
      ++pos_;
      spec.factors.push_back(atom());
    }
    return spec;
  }

private:
  [[noreturn]] void fail(const std::string &why) { fail_at(why, pos_); }
  [[noreturn]] void fail_at(const std::string &why, std::size_t p) {
    throw ParseError(why, offset_[std::min(p, offset_.size() - 1)]);
  }
  bool accept(std::string_view word) {
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 100'000'000)
        fail_at("integer too large", start);
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start)
      fail("expected integer");
    return v;
  }

  Atom atom() {
    const std::size_t start = pos_;
    if (accept("ESP(") || accept("ESM(")) {
      const bool plus = s_[start + 2] == 'P';
      const std::size_t at_p = pos_;
      const std::uint64_t p = integer();
      expect(',');
      const std::size_t at_m = pos_;
      const std::uint64_t m = integer();
      expect(')');
      if (!is_prime(p))
        fail_at("extraspecial parameter p must be prime", at_p);
      if (m < 1)
        fail_at("extraspecial parameter m must be at least 1", at_m);
      return {plus ? Family::ExtraspecialPlus : Family::ExtraspecialMinus, {p, m}};
    }
    if (accept("SL(")) {
      const std::size_t at_two = pos_;
      if (integer() != 2)
        fail_at("only SL(2,q) is supported", at_two);
      expect(',');
      const std::size_t at_q = pos_;
      const std::uint64_t q = integer();
      expect(')');
      if (!is_prime(q) || q > 7)
        fail_at("SL(2,q) needs q a prime at most 7", at_q);
      return {Family::SL2, {q}};
    }
    if (pos_ >= s_.size())
      fail("expected a group family");
    const char f = s_[pos_++];
    const std::size_t at_n = pos_;
    switch (f) {
    case 'C': {
      const std::uint64_t n = integer();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        const std::size_t at_e = pos_;
        const std::uint64_t e = integer();
        if (!is_prime(n))
          fail_at("elementary abelian C_p^n needs p prime", at_n);
        if (e < 1)
          fail_at("elementary abelian rank must be at least 1", at_e);
        return {Family::ElementaryAbelian, {n, e}};
      }
      if (n < 1)
        fail_at("cyclic order must be at least 1", at_n);
      return {Family::Cyclic, {n}};
    }
    case 'D': {
      const std::uint64_t n = integer();
      if (n < 4 || n % 2)
        fail_at("dihedral parameter is the group order and must be even and >= 4", at_n);
      return {Family::Dihedral, {n}};
    }
    case 'Q': {
      const std::uint64_t n = integer();
      if (n < 8 || !is_power_of_two(n))
        fail_at("generalized quaternion order must be a power of two >= 8", at_n);
      return {Family::GeneralizedQuaternion, {n}};
    }
    case 'S': {
      const std::uint64_t n = integer();
      if (n < 1)
        fail_at("symmetric degree must be at least 1", at_n);
      return {Family::Symmetric, {n}};
    }
    case 'A': {
      const std::uint64_t n = integer();
      if (n < 1)
        fail_at("alternating degree must be at least 1", at_n);
      return {Family::Alternating, {n}};
    }
    default:
      fail_at("unknown group family", start);
    }
  }

  std::string s_;
  std::vector<std::size_t> offset_;
  std::size_t pos_ = 0;
};

std::string render_atom(const Atom &a) {
  const auto &p = a.params;
  switch (a.family) {
  case Family::Cyclic:
    return "C" + std::to_string(p[0]);
  case Family::ElementaryAbelian:
    return "C" + std::to_string(p[0]) + "^" + std::to_string(p[1]);
  case Family::Dihedral:
    return "D" + std::to_string(p[0]);
  case Family::GeneralizedQuaternion:
    return "Q" + std::to_string(p[0]);
  case Family::ExtraspecialPlus:
    return "ESp(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
  case Family::ExtraspecialMinus:
    return "ESm(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
  case Family::Symmetric:
    return "S" + std::to_string(p[0]);
  case Family::Alternating:
    return "A" + std::to_string(p[0]);
  case Family::SL2:
    return "SL(2," + std::to_string(p[0]) + ")";
  }
  return {};
}

FiniteGroup cyclic(std::uint64_t n, std::size_t cap) {
  if (n > cap)
    throw ResourceError("cyclic group of order " + std::to_string(n) + " exceeds the order cap");
  std::vector<Elem> flat(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : i == 1 ? "a" : "a^" + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j)
      flat[i * n + j] = static_cast<Elem>((i + j) % n);
  }
  return FiniteGroup::from_trusted_table(n, std::move(flat), std::move(labels));
}

FiniteGroup from_presentation(const std::string &text, std::uint64_t expected) {
  const Presentation p = parse_presentation(text);
  FiniteGroup g = realize(coset_enumerate(p), kDefaultOrderCap).group;
  if (g.order() != expected)
    throw InternalError("presentation '" + text + "' gave order " + std::to_string(g.order()) +
                        ", expected " + std::to_string(expected));
  return g;
}

std::string power(const std::string &gen, std::uint64_t e) {
  return e == 1 ? gen : gen + "^" + std::to_string(e);
}

FiniteGroup dihedral(std::uint64_t order) {
  // b^2 = a^(n/2) = 1, b^-1 a b = a^-1
  const std::uint64_t m = order / 2;
  return from_presentation("a, b | " + power("a", m) + ", b^2, b^-1 a b a", order);
}

FiniteGroup quaternion(std::uint64_t order) {
  // b^2 = a^(n/4), b^-1 a b = a^-1
  return from_presentation("a, b | b^2 a^-" + std::to_string(order / 4) + ", b^-1 a b a", order);
}

FiniteGroup extraspecial_base(std::uint64_t p, bool plus) {
  if (p == 2)
    return plus ? dihedral(8) : quaternion(8);
  const std::string ps = std::to_string(p);
  if (plus)
    // [a,b] = a^-1 b^-1 a b = c central, all of order p
    return from_presentation("a, b, c | a^" + ps + ", b^" + ps + ", c^" + ps +
                                 ", a^-1 c^-1 a c, b^-1 c^-1 b c, a^-1 b^-1 a b c^-1",
                             p * p * p);
  // a of order p^2, b^-1 a b = a^(1+p)
  return from_presentation("a, b | a^" + std::to_string(p * p) + ", b^" + ps + ", b^-1 a b a^-" +
                               std::to_string(p + 1),
                           p * p * p);
}

FiniteGroup extraspecial(std::uint64_t p, std::uint64_t m, bool plus, std::size_t cap) {
  const std::uint64_t order = checked_pow(p, 2 * m + 1);
  if (order > cap)
    throw ResourceError("extraspecial group of order p^" + std::to_string(2 * m + 1) +
                        " exceeds the order cap");
  FiniteGroup g = extraspecial_base(p, plus);
  const FiniteGroup e1 = extraspecial_base(p, true);
  for (std::uint64_t i = 1; i < m; ++i)
    g = central_product(g, e1);
  return g;
}

std::vector<std::uint32_t> identity_perm(std::size_t n) {
  std::vector<std::uint32_t> p(n);
  for (std::size_t i = 0; i < n; ++i)
    p[i] = static_cast<std::uint32_t>(i);
  return p;
}

Permutation cycle(std::size_t n, std::initializer_list<std::uint32_t> c) {
  Permutation p = identity_perm(n);
  const std::vector<std::uint32_t> v(c);
  for (std::size_t i = 0; i < v.size(); ++i)
    p[v[i]] = v[(i + 1) % v.size()];
  return p;
}

FiniteGroup symmetric(std::uint64_t n, std::size_t cap) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation rot(n);
    for (std::size_t i = 0; i < n; ++i)
      rot[i] = static_cast<std::uint32_t>((i + 1) % n);
    gens.push_back(rot);
    gens.push_back(cycle(n, {0, 1}));
  }
  return from_permutations(gens, cap);
}

FiniteGroup alternating(std::uint64_t n, std::size_t cap) {
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k)
    gens.push_back(cycle(n, {0, 1, k}));
  return from_permutations(gens, cap);
}

FiniteGroup sl2(std::uint64_t q, std::size_t cap) {
  using M = std::array<std::uint64_t, 4>;
  std::vector<M> mats;
  std::map<M, std::uint32_t> index;
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t b = 0; b < q; ++b)
      for (std::uint64_t c = 0; c < q; ++c)
        for (std::uint64_t d = 0; d < q; ++d)
          if ((a * d + q * q - b * c) % q == 1) {
            index[{a, b, c, d}] = static_cast<std::uint32_t>(mats.size());
            mats.push_back({a, b, c, d});
          }
  auto mul = [q](const M &x, const M &y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q,
             (x[2] * y[0] + x[3] * y[2]) % q, (x[2] * y[1] + x[3] * y[3]) % q};
  };
  std::vector<Permutation> gens;
  for (const M &g : {M{1, 1, 0, 1}, M{1, 0, 1, 1}}) {
    Permutation p(mats.size());
    for (std::size_t i = 0; i < mats.size(); ++i)
      p[i] = index.at(mul(mats[i], g));
    gens.push_back(std::move(p));
  }
  return from_permutations(gens, cap);
}

FiniteGroup make_atom(const Atom &a, std::size_t cap) {
  const auto &p = a.params;
  switch (a.family) {
  case Family::Cyclic:
    return cyclic(p[0], cap);
  case Family::ElementaryAbelian: {
    if (checked_pow(p[0], p[1]) > cap)
      throw ResourceError("elementary abelian group exceeds the order cap");
    FiniteGroup g = cyclic(p[0], cap);
    for (std::uint64_t i = 1; i < p[1]; ++i)
      g = direct_product(g, cyclic(p[0], cap), cap);
    return g;
  }
  case Family::Dihedral:
    if (p[0] > cap)
      throw ResourceError("dihedral group exceeds the order cap");
    return dihedral(p[0]);
  case Family::GeneralizedQuaternion:
    if (p[0] > cap)
      throw ResourceError("quaternion group exceeds the order cap");
    return quaternion(p[0]);
  case Family::ExtraspecialPlus:
    return extraspecial(p[0], p[1], true, cap);
  case Family::ExtraspecialMinus:
    return extraspecial(p[0], p[1], false, cap);
  case Family::Symmetric:
    return symmetric(p[0], cap);
  case Family::Alternating:
    return alternating(p[0], cap);
  case Family::SL2:
    return sl2(p[0], cap);
  }
  throw InternalError("unknown family");
}

} // namespace

GroupSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string render(const GroupSpec &spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    if (i)
      out += "x";
    out += render_atom(spec.factors[i]);
  }
  return out;
}

FiniteGroup make(const GroupSpec &spec, std::size_t order_cap) {
  if (spec.factors.empty())
    throw DomainError("empty group specification");
  FiniteGroup g = make_atom(spec.factors[0], order_cap);
  for (std::size_t i = 1; i < spec.factors.size(); ++i)
    g = direct_product(g, make_atom(spec.factors[i], order_cap), order_cap);
  g.set_name(render(spec));
  return g;
}

FiniteGroup make(std::string_view text, std::size_t order_cap) {
  return make(parse_spec(text), order_cap);
}

FiniteGroup central_product(const FiniteGroup &a, const FiniteGroup &b) {
  auto generator_of_center = [](const FiniteGroup &g) {
    const auto z = center(g).members();
    if (z.size() < 2 || !is_prime(z.size()))
      throw DomainError("central product needs a center of prime order");
    return z[1];
  };
  const Elem za = generator_of_center(a);
  const Elem zb = generator_of_center(b);
  if (center(a).size() != center(b).size())
    throw DomainError("central product needs centers of equal order");

  const FiniteGroup d = direct_product(a, b);
  // Identify za^i with zb^i: quotient by {(za^i, zb^-i)}.
  Subgroup n(d.order());
  Elem x = 0, y = 0;
  do {
    n.insert(static_cast<Elem>(x * b.order() + b.inv(y)));
    x = a.mul(x, za);
    y = b.mul(y, zb);
  } while (x != 0);
  return quotient(d, n).group;
}

std::vector<std::string> sweep_catalog(std::size_t max_order) {
  static const std::vector<std::string> all = {
      "C1",        "C2",        "C3",        "C4",       "C5",        "C6",        "C7",
      "C8",        "C9",        "C10",       "C11",      "C12",       "C13",       "C14",
      "C15",       "C16",       "C2^2",      "C2xC4",    "C2^3",      "C3^2",      "C2xC6",
      "C4xC4",     "C2xC8",     "C2^2xC4",   "C2^4",     "D6",        "D8",        "Q8",
      "D10",       "A4",        "D12",       "D14",      "D16",       "Q16",       "D8xC2",
      "Q8xC2",     "C3xC6",     "D18",       "S3xC3",    "C2xC10",    "D20",       "C3xC7",
      "D22",       "S4",        "SL(2,3)",   "D24",      "S3xC4",     "D8xC3",     "Q8xC3",
      "C2xC12",    "C2^2xC6",   "C5^2",      "D26",      "C3^3",      "C3xC9",     "ESp(3,1)",
      "ESm(3,1)",  "D28",       "C2xC14",    "D30",      "C17",       "C18",       "C19",
      "C20",       "C21",       "C22",       "C23",      "C24",       "C25",       "C26",
      "C27",       "C28",       "C29",       "C30",      "C31",       "C32",       "D32",
      "Q32",       "C2xC16",    "C4xC8",     "C2xC4xC4", "C2^2xC8",   "D8xC4",     "Q8xC4",
      "D8xC2^2",   "Q8xC2^2",   "ESp(2,2)",  "ESm(2,2)", "C2^3xC4",   "C2^5",
  };
  std::vector<std::string> out;
  for (const auto &s : all) {
    const FiniteGroup g = make(s);
    if (g.order() <= max_order)
      out.push_back(s);
  }
  return out;
}

} // namespace tdeg
