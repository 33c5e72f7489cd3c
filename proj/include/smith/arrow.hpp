#pragma once

// The arrow category Arr C: objects are chain maps f : X0 -> X1, morphisms commuting squares.
// Carries the pointwise tensor structure (unit L0 S) and the pushout product (unit L1 S).

#include <array>

#include "smith/complex.hpp"

namespace smith {

using ArrowObject = ChainMap;

/// A morphism f -> g of arrows: a0 : X0 -> Y0 and a1 : X1 -> Y1 with g a0 = a1 f.
struct ArrowSquare {
  ArrowObject src;
  ArrowObject dst;
  ChainMap a0;
  ChainMap a1;

  friend bool operator==(const ArrowSquare&, const ArrowSquare&) = default;
};

inline const ChainComplex& ev0(const ArrowObject& f) { return f.src(); }
inline const ChainComplex& ev1(const ArrowObject& f) { return f.dst(); }
inline const ChainMap& ev0(const ArrowSquare& a) { return a.a0; }
inline const ChainMap& ev1(const ArrowSquare& a) { return a.a1; }

Verdict validate_square(const ArrowSquare& a);
bool same_graded_data(const ArrowSquare& a, const ArrowSquare& b);
ArrowSquare identity_square(const ArrowObject& f);
ArrowSquare zero_square(const ArrowObject& f, const ArrowObject& g);
/// b o a.
ArrowSquare compose(const ArrowSquare& b, const ArrowSquare& a);
ArrowSquare operator+(const ArrowSquare& a, const ArrowSquare& b);
ArrowSquare scaled(const ArrowSquare& a, std::uint32_t k);
bool is_iso(const ArrowSquare& a);
ArrowSquare inverse_iso(const ArrowSquare& a);
/// Reads a square as living between arrows with the same graded data.
ArrowSquare retype(const ArrowSquare& a, const ArrowObject& src, const ArrowObject& dst);
/// Equality of arrows up to zero padding of windows.
bool same_arrow(const ArrowObject& f, const ArrowObject& g);

// ---------------------------------------------------------------------------
// Evaluation functors and their adjoints

ArrowObject L0(const ChainComplex& x);
ArrowObject L1(const ChainComplex& x);
ArrowObject U0(const ChainComplex& x);
ArrowObject U1(const ChainComplex& x);
ArrowSquare L0(const ChainMap& g);
ArrowSquare L1(const ChainMap& g);
ArrowSquare U0(const ChainMap& g);
ArrowSquare U1(const ChainMap& g);

enum class EvalAdjunction { L0Ev0, L1Ev1, Ev0U0, Ev1U1 };

/// Unit and counit of one of the four adjunctions, at a complex X (for the C-side) and an
/// arrow f (for the Arr-side). For L -| Ev: unit X -> Ev L X, counit L Ev f -> f.
/// For Ev -| U: unit f -> U Ev f, counit Ev U X -> X.
struct EvalUnitCounit {
  ChainMap c_side;       // unit (L -| Ev) or counit (Ev -| U), a map in C
  ArrowSquare arr_side;  // counit (L -| Ev) or unit (Ev -| U), a square
};
EvalUnitCounit eval_unit_counit(EvalAdjunction which, const ChainComplex& x, const ArrowObject& f);
/// Equal hom-space dimensions on both sides plus both triangle identities, exactly.
bool adjunction_check(EvalAdjunction which, const ChainComplex& x, const ArrowObject& f);

// ---------------------------------------------------------------------------
// Tensor product structure

ArrowObject tensor_arrow(const ArrowObject& f, const ArrowObject& g);
ArrowSquare tensor_square(const ArrowSquare& a, const ArrowSquare& b);
ArrowSquare tensor_left_unitor(const ArrowObject& f);
ArrowSquare tensor_right_unitor(const ArrowObject& f);
ArrowSquare tensor_symmetry(const ArrowObject& f, const ArrowObject& g);
ArrowSquare tensor_associator(const ArrowObject& f, const ArrowObject& g, const ArrowObject& h);

/// Hom(X0,Y0) x_{Hom(X0,Y1)} Hom(X1,Y1) -> Hom(X1,Y1).
struct HomTensor {
  ArrowObject arrow;
  Pullback domain;  // to_b lands in Hom(X0,Y0), to_c in Hom(X1,Y1)
};
HomTensor hom_tensor(const ArrowObject& f, const ArrowObject& g);
/// The square f -> hom_tensor(g, h) adjoint to a : f (x) g -> h.
ArrowSquare curry_tensor(const ArrowSquare& a, const ArrowObject& f, const ArrowObject& g);

// ---------------------------------------------------------------------------
// Pushout product structure

/// f box g : (X0 (x) Y1) u_{X0 (x) Y0} (X1 (x) Y0) -> X1 (x) Y1.
struct PushoutProduct {
  ArrowObject arrow;
  Pushout domain;  // from_b leaves X0 (x) Y1, from_c leaves X1 (x) Y0
};
PushoutProduct pushout_product(const ArrowObject& f, const ArrowObject& g);
ArrowSquare pushout_product_square(const ArrowSquare& a, const ArrowSquare& b);
ArrowSquare box_left_unitor(const ArrowObject& f);
ArrowSquare box_right_unitor(const ArrowObject& f);
ArrowSquare box_symmetry(const ArrowObject& f, const ArrowObject& g);

/// The colimit of X_i (x) Y_j (x) Z_k over (i,j,k) != (1,1,1), bracketed as (X (x) Y) (x) Z,
/// with its induced arrow to (X1 (x) Y1) (x) Z1.
struct PuncturedCube {
  static constexpr std::array<int, 7> vertices = {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110};
  ChainComplex object;
  std::array<ChainComplex, 7> corners;
  std::array<ChainMap, 7> legs;
  ArrowObject arrow;
};
PuncturedCube punctured_cube_colimit(const ArrowObject& f, const ArrowObject& g, const ArrowObject& h);

/// (f box g) box h -> f box (g box h), assembled through the punctured cube; both comparison
/// squares with the cube are certified isomorphisms.
struct BoxAssociativity {
  PuncturedCube cube;
  ArrowSquare left_to_cube;   // (f box g) box h -> cube arrow
  ArrowSquare right_to_cube;  // f box (g box h) -> cube arrow (after the C-associator)
  ArrowSquare associator;
};
BoxAssociativity box_associativity(const ArrowObject& f, const ArrowObject& g, const ArrowObject& h);
ArrowSquare box_associator(const ArrowObject& f, const ArrowObject& g, const ArrowObject& h);

/// Hom(X1,Y0) -> Hom(X0,Y0) x_{Hom(X0,Y1)} Hom(X1,Y1).
struct HomBox {
  ArrowObject arrow;
  Pullback codomain;
};
HomBox hom_pushout(const ArrowObject& f, const ArrowObject& g);
/// The square f -> hom_pushout(g, h) adjoint to a : f box g -> h.
ArrowSquare curry_box(const ArrowSquare& a, const ArrowObject& f, const ArrowObject& g);

// ---------------------------------------------------------------------------
// Spaces of squares

/// Declares unknown components a0, a1 for a square f -> g.
class SquareUnknown {
 public:
  SquareUnknown(LinearSystem& sys, const ArrowObject& f, const ArrowObject& g);
  const MapUnknown& a0() const { return a0_; }
  const MapUnknown& a1() const { return a1_; }
  /// Chain-map conditions on both components and g a0 = a1 f.
  void add_conditions(LinearSystem& sys) const;
  ArrowSquare read(const std::vector<Matrix>& solution) const;

 private:
  ArrowObject f_;
  ArrowObject g_;
  MapUnknown a0_;
  MapUnknown a1_;
};

std::vector<ArrowSquare> square_space(const ArrowObject& f, const ArrowObject& g);
std::size_t square_space_dim(const ArrowObject& f, const ArrowObject& g);
/// Columns are the squares flattened degree by degree (a0 then a1); for rank computations.
Matrix square_coordinates(const std::vector<ArrowSquare>& squares);

enum class ArrowStructure { Tensor, Box };
/// Arr(f * g, h) and Arr(f, Hom_*(g, h)) have equal dimension and currying maps a basis of
/// the former to an independent family of the latter.
bool closed_adjunction_check(ArrowStructure s, const ArrowObject& f, const ArrowObject& g, const ArrowObject& h);

}  // namespace smith
