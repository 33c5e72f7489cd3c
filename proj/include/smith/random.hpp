#pragma once

// Seeded generators for matrices, complexes and chain maps.

#include <cstdint>
#include <random>

#include "smith/arrow.hpp"
#include "smith/complex.hpp"

namespace smith {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Independent stream for trial `index` of a run seeded with `seed`.
  static Rng for_trial(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return eng_(); }
  /// Uniform integer in [lo, hi].
  long long uniform(long long lo, long long hi);
  std::uint32_t element(const Field& f);
  std::uint32_t nonzero(const Field& f);
  bool coin(double p_true = 0.5);

 private:
  std::mt19937_64 eng_;
};

/// Shape limits for generated instances.
struct GenConfig {
  Field field;
  int lo = -3;
  int hi = 3;
  std::size_t max_dim = 6;
  /// Number of consecutive degrees a generated complex may occupy.
  int max_span = 7;
  /// Cap on the total dimension of a generated complex.
  std::size_t max_total = 42;
};

Matrix random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols);
Matrix random_invertible(Rng& rng, const Field& f, std::size_t n);
/// A random matrix of the given rank.
Matrix random_of_rank(Rng& rng, const Field& f, std::size_t rows, std::size_t cols, std::size_t r);

/// Direct sum of spheres and disks twisted by random degreewise changes of basis.
ChainComplex random_complex(Rng& rng, const GenConfig& cfg);
/// Same, with the spheres and disks chosen so the result is acyclic.
ChainComplex random_acyclic(Rng& rng, const GenConfig& cfg);
/// The sphere and disk multiplicities used to build a complex; spheres[n] copies of S^n and
/// disks[n] copies of D^n.
struct ComplexRecipe {
  std::map<int, std::size_t> spheres;
  std::map<int, std::size_t> disks;
};
ChainComplex complex_from_recipe(Rng& rng, const Field& f, const ComplexRecipe& r, bool twist = true);
ComplexRecipe random_recipe(Rng& rng, const GenConfig& cfg, bool acyclic);

/// Uniformly random chain map A -> B.
ChainMap random_map(Rng& rng, const ChainComplex& a, const ChainComplex& b);
/// Random chain automorphism of X built from the sphere/disk decomposition found by elimination.
ChainMap random_automorphism(Rng& rng, const ChainComplex& x);
/// A degreewise injection out of `a`: a random map to some complex plus the direct-sum inclusion.
ChainMap random_injection(Rng& rng, const ChainComplex& a, const GenConfig& cfg);
/// A degreewise surjection onto `b`.
ChainMap random_surjection(Rng& rng, const ChainComplex& b, const GenConfig& cfg);
/// A quasi-isomorphism out of `a`: adds an acyclic summand and mixes by an automorphism.
ChainMap random_quasi_iso(Rng& rng, const ChainComplex& a, const GenConfig& cfg);

/// A random chain map between two random complexes.
ArrowObject random_arrow(Rng& rng, const GenConfig& cfg);
/// A random element of the space of squares f -> g.
ArrowSquare random_square(Rng& rng, const ArrowObject& f, const ArrowObject& g);

}  // namespace smith
