#include "smith/random.hpp"

#include <algorithm>
#include <limits>

namespace smith {

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x5eedu};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return Rng((std::uint64_t{words[0]} << 32) | words[1]);
}

long long Rng::uniform(long long lo, long long hi) {
  if (hi <= lo) return lo;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // rejection keeps the draw exactly uniform and platform independent
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do v = eng_();
  while (v >= limit);
  return lo + static_cast<long long>(v % span);
}

std::uint32_t Rng::element(const Field& f) { return static_cast<std::uint32_t>(uniform(0, f.p() - 1)); }

std::uint32_t Rng::nonzero(const Field& f) { return static_cast<std::uint32_t>(uniform(1, f.p() - 1)); }

bool Rng::coin(double p_true) {
  const auto scale = static_cast<long long>(1) << 30;
  return uniform(0, scale - 1) < static_cast<long long>(p_true * static_cast<double>(scale));
}

Matrix random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (auto& x : m.data()) x = rng.element(f);
  return m;
}

Matrix random_invertible(Rng& rng, const Field& f, std::size_t n) {
  // product of a unit lower and an upper triangular matrix with nonzero diagonal, then a row shuffle
  Matrix l = Matrix::identity(f, n), u(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (c < r) l(r, c) = rng.element(f);
      if (c > r) u(r, c) = rng.element(f);
      if (c == r) u(r, c) = rng.nonzero(f);
    }
  Matrix m = l * u;
  for (std::size_t r = n; r > 1; --r) {
    std::size_t s = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(r - 1)));
    if (s == r - 1) continue;
    for (std::size_t c = 0; c < n; ++c) std::swap(m(r - 1, c), m(s, c));
  }
  return m;
}

Matrix random_of_rank(Rng& rng, const Field& f, std::size_t rows, std::size_t cols, std::size_t r) {
  r = std::min({r, rows, cols});
  Matrix core(f, rows, cols);
  for (std::size_t k = 0; k < r; ++k) core(k, k) = 1;
  return random_invertible(rng, f, rows) * core * random_invertible(rng, f, cols);
}

ComplexRecipe random_recipe(Rng& rng, const GenConfig& cfg, bool acyclic) {
  ComplexRecipe r;
  if (cfg.max_dim == 0 || cfg.max_total == 0) return r;
  const int span = std::max(1, std::min(cfg.max_span, cfg.hi - cfg.lo + 1));
  const int start = static_cast<int>(rng.uniform(cfg.lo, cfg.hi - span + 1));
  const int stop = start + span - 1;
  std::map<int, std::size_t> used;
  std::size_t total = 0;
  auto room = [&](int n) { return used[n] < cfg.max_dim; };
  const long long pieces = rng.uniform(1, static_cast<long long>(span) * 2);
  for (long long k = 0; k < pieces && total < cfg.max_total; ++k) {
    const bool disk = acyclic || rng.coin(0.5);
    if (disk) {
      if (span < 2) {
        if (acyclic) break;
        continue;
      }
      const int n = static_cast<int>(rng.uniform(start + 1, stop));
      if (!room(n) || !room(n - 1) || total + 2 > cfg.max_total) continue;
      ++r.disks[n];
      ++used[n];
      ++used[n - 1];
      total += 2;
    } else {
      const int n = static_cast<int>(rng.uniform(start, stop));
      if (!room(n)) continue;
      ++r.spheres[n];
      ++used[n];
      ++total;
    }
  }
  return r;
}

ChainComplex complex_from_recipe(Rng& rng, const Field& f, const ComplexRecipe& r, bool twist) {
  std::map<int, std::size_t> dims;
  for (auto& [n, k] : r.spheres) dims[n] += k;
  for (auto& [n, k] : r.disks) {
    dims[n] += k;
    dims[n - 1] += k;
  }
  for (auto it = dims.begin(); it != dims.end();) it = it->second == 0 ? dims.erase(it) : std::next(it);
  if (dims.empty()) return ChainComplex::zero(f);
  const int lo = dims.begin()->first, hi = dims.rbegin()->first;
  // basis in degree n: disks D^{n+1} (their lower cells), spheres S^n, disks D^n (upper cells)
  std::map<int, Matrix> diffs;
  auto cnt = [](const std::map<int, std::size_t>& m, int n) {
    auto it = m.find(n);
    return it == m.end() ? std::size_t{0} : it->second;
  };
  for (int n = lo + 1; n <= hi; ++n) {
    Matrix d(f, dims[n - 1], dims[n]);
    const std::size_t k = cnt(r.disks, n);
    const std::size_t col0 = cnt(r.disks, n + 1) + cnt(r.spheres, n);
    for (std::size_t t = 0; t < k; ++t) d(t, col0 + t) = 1;
    diffs.emplace(n, std::move(d));
  }
  if (twist) {
    std::map<int, Matrix> p, pinv;
    for (int n = lo; n <= hi; ++n) {
      p.emplace(n, random_invertible(rng, f, dims[n]));
      pinv.emplace(n, *inverse(p.at(n)));
    }
    for (int n = lo + 1; n <= hi; ++n) diffs.at(n) = p.at(n - 1) * diffs.at(n) * pinv.at(n);
  }
  return ChainComplex::from_maps(f, lo, hi, dims, diffs);
}

ChainComplex random_complex(Rng& rng, const GenConfig& cfg) {
  return complex_from_recipe(rng, cfg.field, random_recipe(rng, cfg, false));
}

ChainComplex random_acyclic(Rng& rng, const GenConfig& cfg) {
  return complex_from_recipe(rng, cfg.field, random_recipe(rng, cfg, true));
}

ChainMap random_map(Rng& rng, const ChainComplex& a, const ChainComplex& b) {
  ChainMap out = ChainMap::zero(a, b);
  for (auto& g : chain_map_space(a, b)) {
    std::uint32_t c = rng.element(a.field());
    if (c) out = out + g.scaled(c);
  }
  return out;
}

ChainMap random_automorphism(Rng& rng, const ChainComplex& x) {
  auto basis = chain_map_space(x, x);
  for (int attempt = 0; attempt < 64; ++attempt) {
    ChainMap m = ChainMap::zero(x, x);
    for (auto& g : basis) {
      std::uint32_t c = rng.element(x.field());
      if (c) m = m + g.scaled(c);
    }
    if (is_isomorphism(m)) return m;
  }
  return ChainMap::identity(x);
}

ChainMap random_injection(Rng& rng, const ChainComplex& a, const GenConfig& cfg) {
  ChainComplex c = random_complex(rng, cfg);
  DirectSum s = biproduct({a, c});
  return pair(s, {random_automorphism(rng, a), random_map(rng, a, c)});
}

ChainMap random_surjection(Rng& rng, const ChainComplex& b, const GenConfig& cfg) {
  ChainComplex c = random_complex(rng, cfg);
  DirectSum s = biproduct({c, b});
  return copair(s, {random_map(rng, c, b), random_automorphism(rng, b)});
}

ChainMap random_quasi_iso(Rng& rng, const ChainComplex& a, const GenConfig& cfg) {
  ChainComplex k = random_acyclic(rng, cfg);
  DirectSum s = biproduct({a, k});
  return pair(s, {random_automorphism(rng, a), random_map(rng, a, k)});
}

ArrowObject random_arrow(Rng& rng, const GenConfig& cfg) {
  ChainComplex a = random_complex(rng, cfg);
  ChainComplex b = random_complex(rng, cfg);
  return random_map(rng, a, b);
}

ArrowSquare random_square(Rng& rng, const ArrowObject& f, const ArrowObject& g) {
  ArrowSquare out = zero_square(f, g);
  for (auto& s : square_space(f, g)) {
    std::uint32_t c = rng.element(f.field());
    if (c) out = out + scaled(s, c);
  }
  return out;
}

}  // namespace smith
