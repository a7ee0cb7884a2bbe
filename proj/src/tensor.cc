#include "tensordeg/tensor.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "reduce.hpp"
#include "tensordeg/errors.hpp"

namespace tdeg {

namespace {

Word first_relator(const FiniteGroup &g, Elem x, Elem y, Elem h) {
  const std::size_t n = g.order();
  return {-tensor_generator(n, g.mul(x, y), h),
          tensor_generator(n, g.left_conj(x, y), g.left_conj(x, h)),
          tensor_generator(n, x, h)};
}

Word second_relator(const FiniteGroup &g, Elem x, Elem h, Elem k) {
  const std::size_t n = g.order();
  return {-tensor_generator(n, x, g.mul(h, k)), tensor_generator(n, x, h),
          tensor_generator(n, g.left_conj(h, x), g.left_conj(h, k))};
}

std::vector<Elem> all_elements(const FiniteGroup &g) {
  std::vector<Elem> v(g.order());
  std::iota(v.begin(), v.end(), Elem{0});
  return v;
}

} // namespace

Presentation present_tensor_square(const FiniteGroup &g, std::span<const Elem> left,
                                   std::span<const Elem> right) {
  const std::size_t n = g.order();
  std::vector<Word> rels;
  rels.reserve((left.size() + right.size()) * n * n);
  for (Elem x : left)
    for (Elem y = 0; y < n; ++y)
      for (Elem h = 0; h < n; ++h)
        rels.push_back(first_relator(g, x, y, h));
  for (Elem h : right)
    for (Elem x = 0; x < n; ++x)
      for (Elem k = 0; k < n; ++k)
        rels.push_back(second_relator(g, x, h, k));

  std::vector<std::string> labels;
  labels.reserve(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      labels.push_back("t(" + g.label(x) + "," + g.label(y) + ")");
  return Presentation(n * n, std::move(rels), std::move(labels));
}

Presentation present_tensor_square(const FiniteGroup &g) {
  const auto all = all_elements(g);
  return present_tensor_square(g, all, all);
}

std::vector<Elem> conjugation_closed_generators(const FiniteGroup &g) {
  const auto classes = conjugacy_classes(g);
  std::vector<std::uint32_t> by_size(classes.count());
  std::iota(by_size.begin(), by_size.end(), 0u);
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::uint32_t a, std::uint32_t b) {
    return classes.sizes[a] < classes.sizes[b];
  });

  std::vector<Elem> chosen;
  Subgroup span = Subgroup::trivial(g.order());
  for (std::uint32_t c : by_size) {
    if (span.size() == g.order())
      break;
    if (span.contains(classes.representatives[c]))
      continue;
    for (Elem e = 0; e < g.order(); ++e)
      if (classes.class_of[e] == c)
        chosen.push_back(e);
    span = generated_subgroup(g, chosen);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

const FiniteGroup &TensorSquare::group() const {
  if (!table_)
    throw DomainError("tensor square of order " + std::to_string(order()) +
                      " has no Cayley table (cap " + std::to_string(kTableCap) + ")");
  return *table_;
}

Elem TensorSquare::mul(Elem a, Elem b) const {
  return table_ ? table_->mul(a, b) : realized_->mul(a, b);
}

Elem TensorSquare::inv(Elem a) const { return table_ ? table_->inv(a) : realized_->inv(a); }

std::vector<Elem> TensorSquare::action(Elem g) const {
  const FiniteGroup &G = *base_;
  const CosetTable &ct = realized_->table();
  const std::size_t width = ct.width();

  std::vector<Elem> image(width);
  for (std::size_t col = 0; col < width; ++col) {
    const auto src = static_cast<std::size_t>(basis_source_[col / 2]) - 1;
    const auto x = static_cast<Elem>(src / G.order());
    const auto y = static_cast<Elem>(src % G.order());
    const Elem t = pair(G.left_conj(g, x), G.left_conj(g, y));
    image[col] = col % 2 ? inv(t) : t;
  }

  const std::size_t n = order();
  std::vector<Elem> act(n, 0);
  for (std::size_t k = 1; k < n; ++k) {
    const Definition &d = ct.definitions[k];
    act[k] = mul(act[d.source], image[d.column]);
  }
  std::vector<char> hit(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (hit[act[k]])
      throw InternalError("conjugation action on the tensor square is not injective");
    hit[act[k]] = 1;
    for (std::size_t col = 0; col < width; ++col)
      if (act[ct.at(k, col)] != mul(act[k], image[col]))
        throw InternalError("conjugation action on the tensor square is not a homomorphism");
  }
  return act;
}

TensorSquare tensor_square(const FiniteGroup &g, const EnumerationLimits &limits) {
  const std::size_t n = g.order();
  TensorSquare ts;
  ts.base_ = std::make_shared<const FiniteGroup>(g);

  const auto closed = conjugation_closed_generators(g);
  const Presentation p = closed.empty() ? present_tensor_square(g)
                                        : present_tensor_square(g, closed, closed);
  // Short definitions keep relators short, which suits large tensor squares;
  // for big G the many generators make a smaller basis pay off instead.
  detail::ReduceOptions options;
  options.max_expansion = n >= 100 ? 16 : 4;
  auto red = detail::enumerate_reduced(p, limits, options);
  ts.stats_.relators_used = p.relators().size();
  ts.stats_.basis_generators = red.elimination.basis_count;
  ts.stats_.reduced_relators = red.elimination.relators.size();
  ts.stats_.cosets_defined = red.basis_table.cosets_defined;

  ts.pairing_.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i)
    ts.pairing_[i] = detail::apply_original(red, 0, static_cast<Letter>(i + 1));
  ts.basis_source_.assign(red.elimination.basis_count, 0);
  for (std::size_t i = 0; i < n * n; ++i)
    if (red.elimination.basis_index[i] >= 0)
      ts.basis_source_[static_cast<std::size_t>(red.elimination.basis_index[i])] =
          static_cast<Letter>(i + 1);

  ts.realized_ = std::make_shared<const RealizedGroup>(std::move(red.basis_table));
  if (ts.order() <= TensorSquare::kTableCap)
    ts.table_ = ts.realized_->materialize(TensorSquare::kTableCap);

  // Every defining relation must hold, not only the subset enumerated.
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem h = 0; h < n; ++h) {
        if (ts.pair(g.mul(x, y), h) != ts.mul(ts.pair(g.left_conj(x, y), g.left_conj(x, h)), ts.pair(x, h)))
          throw InternalError("tensor square misses a relation of the first kind");
        if (ts.pair(x, g.mul(y, h)) != ts.mul(ts.pair(x, y), ts.pair(g.left_conj(y, x), g.left_conj(y, h))))
          throw InternalError("tensor square misses a relation of the second kind");
      }
  ts.stats_.relators_certified = 2 * n * n * n;

  // kappa along the Schreier tree, then checked on every edge.
  const CosetTable &ct = ts.realized_->table();
  const std::size_t width = ct.width();
  std::vector<Elem> gen_kappa(width);
  for (std::size_t col = 0; col < width; ++col) {
    const auto src = static_cast<std::size_t>(ts.basis_source_[col / 2]) - 1;
    const Elem c = g.commutator(static_cast<Elem>(src / n), static_cast<Elem>(src % n));
    gen_kappa[col] = col % 2 ? g.inv(c) : c;
  }
  const std::size_t order = ts.order();
  ts.kappa_.assign(order, 0);
  for (std::size_t k = 1; k < order; ++k) {
    const Definition &d = ct.definitions[k];
    ts.kappa_[k] = g.mul(ts.kappa_[d.source], gen_kappa[d.column]);
  }
  for (std::size_t k = 0; k < order; ++k)
    for (std::size_t col = 0; col < width; ++col)
      if (ts.kappa_[ct.at(k, col)] != g.mul(ts.kappa_[k], gen_kappa[col]))
        throw InternalError("kappa is not a homomorphism");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (ts.kappa_[ts.pair(x, y)] != g.commutator(x, y))
        throw InternalError("kappa(x (x) y) differs from [x, y]");

  std::vector<Elem> diagonal;
  for (Elem x = 0; x < n; ++x)
    diagonal.push_back(ts.pair(x, x));
  ts.nabla_ = ts.table_ ? generated_subgroup(*ts.table_, diagonal) : ts.realized_->generated_by(diagonal);

  ts.j2_ = Subgroup(order);
  for (std::size_t t = 0; t < order; ++t)
    if (ts.kappa_[t] == 0)
      ts.j2_.insert(static_cast<Elem>(t));
  return ts;
}

Elem tensor_pair(const TensorSquare &ts, Elem x, Elem y) { return ts.pair(x, y); }

Subgroup tensor_centralizer(const TensorSquare &ts, Elem x) {
  Subgroup s(ts.base().order());
  for (Elem a = 0; a < ts.base().order(); ++a)
    if (ts.pair(a, x) == 0)
      s.insert(a);
  return s;
}

Subgroup tensor_center(const TensorSquare &ts) {
  Subgroup s = Subgroup::whole(ts.base().order());
  for (Elem x = 0; x < ts.base().order(); ++x)
    s &= tensor_centralizer(ts, x);
  return s;
}

ExteriorSquare::ExteriorSquare(const TensorSquare &ts) : tensor_(&ts) {
  const std::size_t n = ts.order();
  std::vector<Elem> gens;
  for (Elem x = 0; x < ts.base().order(); ++x) {
    const Elem d = ts.pair(x, x);
    if (ts.kappa(d) != 0)
      throw InternalError("nabla is not contained in ker kappa");
    if (d != 0 && std::find(gens.begin(), gens.end(), d) == gens.end())
      gens.push_back(d);
  }

  constexpr Elem kUnset = UINT32_MAX;
  projection_.assign(n, kUnset);
  std::vector<Elem> queue;
  for (std::size_t c = 0; c < n; ++c) {
    if (projection_[c] != kUnset)
      continue;
    const auto id = static_cast<Elem>(representatives_.size());
    representatives_.push_back(static_cast<Elem>(c));
    queue.assign(1, static_cast<Elem>(c));
    projection_[c] = id;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Elem d : gens) {
        const Elem m = ts.mul(queue[i], d);
        if (projection_[m] == kUnset) {
          projection_[m] = id;
          queue.push_back(m);
        }
      }
  }

  kappa_prime_.resize(order());
  multiplier_ = Subgroup(order());
  for (std::size_t c = 0; c < order(); ++c) {
    kappa_prime_[c] = ts.kappa(representatives_[c]);
    if (kappa_prime_[c] == 0)
      multiplier_.insert(static_cast<Elem>(c));
  }
}

FiniteGroup ExteriorSquare::group(std::size_t order_cap) const {
  const std::size_t n = order();
  if (n > order_cap)
    throw ResourceError("exterior square of order " + std::to_string(n) +
                        " exceeds the table cap " + std::to_string(order_cap));
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[a * n + b] = projection_[tensor_->mul(representatives_[a], representatives_[b])];
  return FiniteGroup::from_trusted_table(n, std::move(flat));
}

ExteriorSquare exterior_square(const TensorSquare &ts) { return ExteriorSquare(ts); }

Subgroup exterior_centralizer(const ExteriorSquare &es, Elem x) {
  const std::size_t n = es.tensor().base().order();
  Subgroup s(n);
  for (Elem a = 0; a < n; ++a)
    if (es.pair(a, x) == 0)
      s.insert(a);
  return s;
}

Subgroup exterior_center(const ExteriorSquare &es) {
  const std::size_t n = es.tensor().base().order();
  Subgroup s = Subgroup::whole(n);
  for (Elem x = 0; x < n; ++x)
    s &= exterior_centralizer(es, x);
  return s;
}

nlohmann::json summary_json(const TensorSquare &ts, const ExteriorSquare &es) {
  nlohmann::json j;
  j["group"] = ts.base().name();
  j["order_G"] = ts.base().order();
  j["order_T"] = ts.order();
  j["order_nabla"] = ts.nabla().size();
  j["order_J2"] = ts.j2().size();
  j["order_exterior"] = es.order();
  j["order_M"] = es.multiplier().size();
  j["Z_tensor_order"] = tensor_center(ts).size();
  j["Z_exterior_order"] = exterior_center(es).size();
  const bool abelian = ts.is_abelian();
  j["T_abelian"] = abelian;
  if (abelian)
    j["T_invariants"] = ts.abelian_invariants();
  return j;
}

} // namespace tdeg
