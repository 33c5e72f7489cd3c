#pragma once

// Bounded chain complexes of finite-dimensional F_p vector spaces and chain maps.
// Differentials lower degree: d_n : C_n -> C_{n-1}.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smith/linalg.hpp"

namespace smith {

/// Outcome of a validator: empty `failure` means the check passed.
struct Verdict {
  std::string failure;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {std::move(why)}; }
  bool ok() const { return failure.empty(); }
  explicit operator bool() const { return ok(); }
};

class ChainComplex {
 public:
  /// The zero complex over F_2 with window [0, 0].
  ChainComplex();
  /// `diffs[k]` is d_{lo+k}, of shape dims(lo+k-1) x dims(lo+k); d_lo therefore has no rows.
  ChainComplex(Field field, int lo, int hi, std::vector<std::size_t> dims, std::vector<Matrix> diffs);

  /// Builds from sparse degree maps; degrees absent from `dims` have dimension 0.
  static ChainComplex from_maps(Field field, int lo, int hi, const std::map<int, std::size_t>& dims,
                                const std::map<int, Matrix>& diffs);
  static ChainComplex zero(Field field, int lo = 0, int hi = 0);
  /// S: the field in degree 0.
  static ChainComplex unit(Field field);
  /// S^n: the field in degree n.
  static ChainComplex sphere(Field field, int n);
  /// D^n: the field in degrees n and n-1 joined by the identity.
  static ChainComplex disk(Field field, int n);

  const Field& field() const { return data_->field; }
  int lo() const { return data_->lo; }
  int hi() const { return data_->hi; }
  std::size_t dim(int n) const;
  /// d_n : C_n -> C_{n-1}; a correctly shaped zero matrix outside the window.
  Matrix diff(int n) const;
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  friend bool operator==(const ChainComplex& a, const ChainComplex& b);

 private:
  struct Data {
    Field field;
    int lo = 0;
    int hi = 0;
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
  };
  std::shared_ptr<const Data> data_;
};

/// Equality of the graded data (dims and differentials in every degree), ignoring how far
/// each window is padded with zeros.
bool same_graded_data(const ChainComplex& a, const ChainComplex& b);
/// Checks window shapes and d^2 = 0; reports the first failing degree.
Verdict validate_complex(const ChainComplex& c);
std::string describe(const ChainComplex& c);

class ChainMap {
 public:
  ChainMap() = default;
  /// Components absent from `comps` are zero. Shapes are checked, commutation is not.
  ChainMap(ChainComplex src, ChainComplex dst, const std::map<int, Matrix>& comps = {});

  static ChainMap zero(const ChainComplex& src, const ChainComplex& dst);
  static ChainMap identity(const ChainComplex& x);

  const ChainComplex& src() const { return src_; }
  const ChainComplex& dst() const { return dst_; }
  const Field& field() const { return src_.field(); }
  /// dst.dim(n) x src.dim(n).
  Matrix comp(int n) const;
  /// Degrees where both source and target can be nonzero.
  int lo() const { return std::max(src_.lo(), dst_.lo()); }
  int hi() const { return std::min(src_.hi(), dst_.hi()); }

  ChainMap operator+(const ChainMap& o) const;
  ChainMap operator-(const ChainMap& o) const;
  ChainMap operator-() const;
  ChainMap scaled(std::uint32_t k) const;
  bool is_zero() const;

  friend bool operator==(const ChainMap& a, const ChainMap& b);

 private:
  ChainComplex src_;
  ChainComplex dst_;
  std::map<int, Matrix> comps_;
};

/// g o f.
ChainMap compose(const ChainMap& g, const ChainMap& f);
inline ChainMap operator*(const ChainMap& g, const ChainMap& f) { return compose(g, f); }
ChainMap compose(const std::vector<ChainMap>& chain_right_to_left);

Verdict validate_map(const ChainMap& f);
bool same_graded_data(const ChainMap& a, const ChainMap& b);
bool is_degreewise_injective(const ChainMap& f);
bool is_degreewise_surjective(const ChainMap& f);
bool is_isomorphism(const ChainMap& f);
/// Componentwise inverse; throws if some component is not invertible.
ChainMap inverse_iso(const ChainMap& f);
/// Re-targets a map at an isomorphic-by-equality copy of its source/target (same graded data).
ChainMap retype(const ChainMap& f, const ChainComplex& src, const ChainComplex& dst);

// ---------------------------------------------------------------------------
// Homology

struct HomologyReport {
  int lo = 0;
  int hi = 0;
  std::map<int, std::size_t> dims;
  /// Columns span Z_n; columns of `boundaries` span B_n; `representatives` complete B_n to Z_n.
  std::map<int, Matrix> cycles;
  std::map<int, Matrix> boundaries;
  std::map<int, Matrix> representatives;

  std::size_t dim(int n) const;
  std::size_t total() const;
};

HomologyReport homology(const ChainComplex& c);
bool is_acyclic(const ChainComplex& c);
/// Matrix of H_n(f) in the representative bases of source and target homology.
Matrix induced_on_homology(const ChainMap& f, int n, const HomologyReport& src,
                           const HomologyReport& dst);
bool is_quasi_iso(const ChainMap& f);

// ---------------------------------------------------------------------------
// Monoidal structure

/// (A (x) B)_n = sum_{i+j=n} A_i (x) B_j, summands by decreasing i, each with basis
/// (row of A_i, row of B_j) in lexicographic order. d(a(x)b) = da(x)b + (-1)^{|a|} a(x)db.
ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b);
/// Offset of the A_i (x) B_{n-i} summand inside (A (x) B)_n.
std::size_t tensor_offset(const ChainComplex& a, const ChainComplex& b, int n, int i);
ChainMap tensor_map(const ChainMap& f, const ChainMap& g);
/// tau : A (x) B -> B (x) A, a (x) b -> (-1)^{|a||b|} b (x) a.
ChainMap symmetry_iso(const ChainComplex& a, const ChainComplex& b);
/// (A (x) B) (x) C -> A (x) (B (x) C).
ChainMap associator(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c);
/// S (x) X -> X.
ChainMap left_unitor(const ChainComplex& x);
/// X (x) S -> X.
ChainMap right_unitor(const ChainComplex& x);

/// Hom(A,B)_n = sum_i Hom(A_i, B_{i+n}) by increasing i, each a row-major flattened
/// dim(B_{i+n}) x dim(A_i) matrix. (d phi) = d_B phi - (-1)^n phi d_A.
ChainComplex hom_complex(const ChainComplex& a, const ChainComplex& b);
std::size_t hom_offset(const ChainComplex& a, const ChainComplex& b, int n, int i);
/// A chain map A -> B as a degree-0 element (column vector) of Hom(A,B).
Matrix map_to_hom_vector(const ChainMap& f);
ChainMap hom_vector_to_map(const ChainComplex& a, const ChainComplex& b, const Matrix& v);
/// phi -> g o phi : Hom(A,B) -> Hom(A,B') for g : B -> B'.
ChainMap hom_post(const ChainMap& g, const ChainComplex& a);
/// psi -> psi o f : Hom(A',B) -> Hom(A,B) for f : A -> A'.
ChainMap hom_pre(const ChainMap& f, const ChainComplex& b);
/// phi : A (x) B -> C  gives  A -> Hom(B, C), a -> (b -> phi(a (x) b)).
ChainMap curry(const ChainMap& phi, const ChainComplex& a, const ChainComplex& b);
/// Inverse of curry: psi : A -> Hom(B, C) gives A (x) B -> C.
ChainMap uncurry(const ChainMap& psi, const ChainComplex& b, const ChainComplex& c);

// ---------------------------------------------------------------------------
// Limits and colimits

struct DirectSum {
  ChainComplex object;
  std::vector<ChainMap> inclusions;
  std::vector<ChainMap> projections;
};

DirectSum biproduct(const std::vector<ChainComplex>& parts);
/// [f_1 ... f_k] : X_1 (+) ... (+) X_k -> Y.
ChainMap copair(const DirectSum& sum, const std::vector<ChainMap>& maps);
/// (f_1, ..., f_k) : X -> Y_1 (+) ... (+) Y_k.
ChainMap pair(const DirectSum& sum, const std::vector<ChainMap>& maps);
/// f_1 (+) ... (+) f_k between biproducts.
ChainMap direct_sum_map(const DirectSum& src, const DirectSum& dst, const std::vector<ChainMap>& maps);

struct Kernel {
  ChainComplex object;
  ChainMap inclusion;
};

struct Cokernel {
  ChainComplex object;
  ChainMap projection;
};

Kernel kernel(const ChainMap& f);
/// Quotient bases are the standard vectors completing an image basis, chosen greedily.
Cokernel cokernel(const ChainMap& f);

/// Pushout of B <-f- A -g-> C, realised as coker(A -> B (+) C, a -> (f a, -g a)).
struct Pushout {
  ChainComplex object;
  ChainMap from_b;
  ChainMap from_c;
  /// The induced map from the pushout given a cocone (u : B -> T, v : C -> T).
  ChainMap mediate(const ChainMap& u, const ChainMap& v) const;
};

Pushout pushout(const ChainMap& f, const ChainMap& g);

/// Pullback of B -f-> D <-g- C, realised as ker(B (+) C -> D, (b,c) -> f b - g c).
struct Pullback {
  ChainComplex object;
  ChainMap to_b;
  ChainMap to_c;
  ChainMap mediate(const ChainMap& u, const ChainMap& v) const;
};

Pullback pullback(const ChainMap& f, const ChainMap& g);

/// The unique u with u o legs[k] = targets[k] for all k, when the legs are jointly
/// degreewise surjective onto their common target. nullopt when no such u exists.
std::optional<ChainMap> factor_through(const std::vector<ChainMap>& legs,
                                       const std::vector<ChainMap>& targets);
/// The unique u with projections[k] o u = targets[k], when the projections are jointly
/// degreewise injective out of their common source. nullopt when no such u exists.
std::optional<ChainMap> lift_through(const std::vector<ChainMap>& projections,
                                     const std::vector<ChainMap>& targets);
/// As above, but throws when the mediating map does not exist.
ChainMap must_factor(const std::vector<ChainMap>& legs, const std::vector<ChainMap>& targets,
                     const char* what);
ChainMap must_lift(const std::vector<ChainMap>& projections, const std::vector<ChainMap>& targets,
                   const char* what);

// ---------------------------------------------------------------------------
// Cones, cylinders, path objects

struct Cone {
  ChainComplex object;  // B_n (+) A_{n-1}, d(b, a) = (db + f a, -da)
  ChainMap inclusion;   // B -> Cone(f)
};

/// A -> Cyl(f) -> B with Cyl(f)_n = A_n (+) B_n (+) A_{n-1},
/// d(a, b, x) = (da - x, db + f x, -dx): degreewise injection followed by a quasi-iso.
struct Cylinder {
  ChainComplex object;
  ChainMap inclusion;   // a -> (a, 0, 0)
  ChainMap projection;  // (a, b, x) -> f a + b
  ChainMap section;     // b -> (0, b, 0)
};

/// A -> N(f) -> B with N(f)_n = A_n (+) B_n (+) B_{n+1},
/// d(a, b, y) = (da, db, f a - b - dy): quasi-iso followed by a degreewise surjection.
struct PathSpace {
  ChainComplex object;
  ChainMap inclusion;   // a -> (a, f a, 0)
  ChainMap projection;  // (a, b, y) -> b
};

/// X -> X^I -> X (+) X.
struct PathObject {
  ChainComplex object;
  DirectSum target;
  ChainMap constant;
  ChainMap endpoints;
};

Cone cone(const ChainMap& f);
Cylinder cylinder(const ChainMap& f);
PathSpace path_space(const ChainMap& f);
PathObject path_object(const ChainComplex& x);

// ---------------------------------------------------------------------------
// Hom spaces of chain maps (degree-0 cycles), computed as solutions of linear systems.

/// Basis of the vector space of chain maps A -> B.
std::vector<ChainMap> chain_map_space(const ChainComplex& a, const ChainComplex& b);
std::size_t chain_map_space_dim(const ChainComplex& a, const ChainComplex& b);

/// Helper that declares one unknown matrix per degree of a prospective chain map A -> B in a
/// LinearSystem and can add the chain-map condition and read solutions back.
class MapUnknown {
 public:
  MapUnknown() = default;
  MapUnknown(LinearSystem& sys, const ChainComplex& a, const ChainComplex& b);

  const ChainComplex& src() const { return a_; }
  const ChainComplex& dst() const { return b_; }
  /// Unknown id of the component in degree n, or nullopt where the component is empty.
  std::optional<std::size_t> at(int n) const;
  void add_chain_conditions(LinearSystem& sys) const;
  ChainMap read(const std::vector<Matrix>& solution) const;
  int lo() const;
  int hi() const;

 private:
  ChainComplex a_;
  ChainComplex b_;
  std::map<int, std::size_t> ids_;
};

/// Terms for  L . X_n . R  contributions; entries with empty components are skipped.
void add_terms(std::vector<LinearSystem::Term>& terms, const MapUnknown& x, int n,
               const Matrix& left, const Matrix& right);

}  // namespace smith
