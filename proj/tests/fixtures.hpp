#pragma once

// Tensor squares are the expensive part of most tests; build each once per
// process.

#include <map>
#include <memory>
#include <string>

#include "tensordeg/catalog.hpp"
#include "tensordeg/tensor.hpp"

namespace fixtures {

struct Squares {
  std::unique_ptr<tdeg::TensorSquare> ts;
  std::unique_ptr<tdeg::ExteriorSquare> es;
};

inline const Squares &squares(const std::string &spec) {
  static std::map<std::string, Squares> cache;
  auto it = cache.find(spec);
  if (it == cache.end()) {
    Squares s;
    s.ts = std::make_unique<tdeg::TensorSquare>(tdeg::tensor_square(tdeg::make(spec)));
    s.es = std::make_unique<tdeg::ExteriorSquare>(*s.ts);
    it = cache.emplace(spec, std::move(s)).first;
  }
  return it->second;
}

inline const tdeg::TensorSquare &ts(const std::string &spec) { return *squares(spec).ts; }
inline const tdeg::ExteriorSquare &es(const std::string &spec) { return *squares(spec).es; }

/// Sweep groups of order <= 16 except C2^4, whose tensor square alone takes
/// several seconds; it has its own tests.
inline std::vector<std::string> quick_catalog() {
  std::vector<std::string> out;
  for (const std::string &s : tdeg::sweep_catalog(16))
    if (s != "C2^4")
      out.push_back(s);
  return out;
}

} // namespace fixtures
