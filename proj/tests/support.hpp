#pragma once

// Shared helpers for the unit tests: small generator configs and independent oracles.

#include <doctest.h>

#include "smith/complex.hpp"
#include "smith/random.hpp"

namespace smith::testing {

inline const std::uint32_t kPrimes[] = {2, 3, 5, 101};

inline GenConfig small_config(std::uint32_t p, std::size_t max_dim = 3, int span = 3, std::size_t total = 6) {
  GenConfig g;
  g.field = Field(p);
  g.lo = -3;
  g.hi = 3;
  g.max_dim = max_dim;
  g.max_span = span;
  g.max_total = total;
  return g;
}

/// dim H_n from ranks alone: dim C_n - rank d_n - rank d_{n+1}.
inline std::size_t homology_by_ranks(const ChainComplex& c, int n) {
  return c.dim(n) - rank(c.diff(n)) - rank(c.diff(n + 1));
}

/// Homology read off a sphere/disk recipe: one class per sphere.
inline std::size_t homology_from_recipe(const ComplexRecipe& r, int n) {
  auto it = r.spheres.find(n);
  return it == r.spheres.end() ? 0 : it->second;
}

inline bool valid(const ChainComplex& c) { return validate_complex(c).ok(); }
inline bool valid(const ChainMap& f) {
  return validate_complex(f.src()).ok() && validate_complex(f.dst()).ok() && validate_map(f).ok();
}

}  // namespace smith::testing
