#pragma once

// Monoids and modules in both monoidal structures on Arr C: DG algebras and their homomorphisms
// (tensor structure), Smith ideals and their modules (pushout product structure).
// All modules are right modules unless the type says otherwise.

#include "smith/kerco.hpp"
#include "smith/random.hpp"

namespace smith {

struct DGAlgebra {
  ChainComplex carrier;
  ChainMap mult;  // R (x) R -> R
  ChainMap unit;  // S -> R
};

struct RightModule {
  ChainComplex carrier;
  ChainMap act;  // M (x) R -> M
};

struct LeftModule {
  ChainComplex carrier;
  ChainMap act;  // R (x) M -> M
};

struct DGBimodule {
  ChainComplex carrier;
  ChainMap left;   // R (x) I -> I
  ChainMap right;  // I (x) R -> I
};

struct MonoidHom {
  DGAlgebra src;
  DGAlgebra dst;
  ChainMap map;
};

struct SmithIdeal {
  DGAlgebra alg;
  DGBimodule ideal;
  ChainMap j;  // I -> R
};

/// a1 : R -> R' a monoid map, a0 : I -> I' a bimodule map, with a1 j = j' a0.
struct SmithIdealMap {
  SmithIdeal src;
  SmithIdeal dst;
  ChainMap a0;
  ChainMap a1;
};

/// f : M0 -> M1 with phi : M1 (x) I -> M0. phi is stored before descent to M1 (x)_R I;
/// descent is one of the validated invariants.
struct SmithModule {
  SmithIdeal over;
  RightModule m0;
  RightModule m1;
  ChainMap f;
  ChainMap phi;
};

/// A module over the monoid p : R0 -> R1 in the tensor structure.
struct TensorMonoidModule {
  MonoidHom over;
  RightModule m0;  // over R0
  RightModule m1;  // over R1
  ChainMap f;
};

/// A monoid in (Arr C, box).
struct SquareMonoid {
  ArrowObject arrow;
  ArrowSquare mult;  // arrow box arrow -> arrow
  ArrowSquare unit;  // L1 S -> arrow
};

/// A right module over a box-monoid.
struct SquareModule {
  ArrowObject arrow;
  ArrowSquare act;  // arrow box monoid -> arrow
};

// ---------------------------------------------------------------------------
// Validators: the first violated invariant is reported. Shape mismatches throw.

Verdict validate_dga(const DGAlgebra& r);
Verdict validate_right_module(const RightModule& m, const DGAlgebra& r);
Verdict validate_left_module(const LeftModule& m, const DGAlgebra& r);
Verdict validate_bimodule(const DGBimodule& m, const DGAlgebra& r);
Verdict validate_monoid_hom(const MonoidHom& p);
Verdict validate_smith_ideal(const SmithIdeal& s);
Verdict validate_smith_ideal_map(const SmithIdealMap& a);
Verdict validate_smith_module(const SmithModule& m);
Verdict validate_tensor_module(const TensorMonoidModule& m);
Verdict validate_square_monoid(const SquareMonoid& m);
Verdict validate_square_module(const SquareModule& m, const SquareMonoid& over);

bool same_data(const DGAlgebra& a, const DGAlgebra& b);
bool same_data(const SmithIdeal& a, const SmithIdeal& b);
bool same_data(const SmithModule& a, const SmithModule& b);
bool same_data(const SquareMonoid& a, const SquareMonoid& b);
bool same_data(const SquareModule& a, const SquareModule& b);

// ---------------------------------------------------------------------------
// Unwinding

/// Throws when the two actions disagree on I (x) I.
SquareMonoid smith_to_square_monoid(const SmithIdeal& s);
SmithIdeal smith_from_square_monoid(const SquareMonoid& m);
/// Throws when act0 and phi do not glue along M0 (x) I.
SquareModule module_to_square_action(const SmithModule& m);
SmithModule module_from_square_action(const SmithIdeal& over, const SquareModule& m);

/// M (x)_R N as the cokernel of act (x) 1 - (1 (x) act) o assoc on (M (x) R) (x) N.
struct RelativeTensor {
  ChainComplex object;
  ChainMap quotient;  // M (x) N -> M (x)_R N
};
RelativeTensor relative_tensor(const RightModule& m, const LeftModule& n, const ChainComplex& r);
LeftModule as_left_module(const DGAlgebra& r);
RightModule as_right_module(const DGAlgebra& r);
/// The descended phi : M1 (x)_R I -> M0.
ChainMap descended_phi(const SmithModule& m);

// ---------------------------------------------------------------------------
// Quotients, kernels, scalars

MonoidHom quotient_dga(const SmithIdeal& s);
SmithIdeal kernel_smith_ideal(const MonoidHom& p);
TensorMonoidModule module_coker(const SmithModule& m);
/// The kernel module, over kernel_smith_ideal(n.over).
SmithModule module_ker(const TensorMonoidModule& n);

SmithModule restrict_scalars(const SmithIdealMap& a, const SmithModule& n);

struct Extension {
  SmithModule module;
  RelativeTensor m0_r;  // M0 (x)_R R'
  RelativeTensor m1_i;  // M1 (x)_R I'
  RelativeTensor m1_r;  // M1 (x)_R R'
  Pushout glue;         // degree-0 part, from_b leaves M0 (x)_R R', from_c leaves M1 (x)_R I'
};
Extension extend_scalars_detailed(const SmithIdealMap& a, const SmithModule& m);
SmithModule extend_scalars(const SmithIdealMap& a, const SmithModule& m);

/// The coequalizer of M box j box j' => M box j', computed componentwise.
struct ExtensionOracle {
  ArrowObject arrow;
  PushoutProduct target;  // M box j'
  ChainMap proj0;         // Ev0(M box j') -> arrow source
  ChainMap proj1;         // Ev1(M box j') -> arrow target
};
ExtensionOracle extend_scalars_oracle(const SmithIdealMap& a, const SmithModule& m);
/// Certified isomorphism from the extend_scalars arrow to the oracle arrow; throws if none.
ArrowSquare extension_comparison(const SmithIdealMap& a, const SmithModule& m);

/// Dimension of the space of module maps m -> n over the same Smith ideal.
std::size_t module_hom_dim(const SmithModule& m, const SmithModule& n);

// ---------------------------------------------------------------------------
// Free monoids and strong quotients

/// The free box-monoid on f with products of total length above n set to zero.
SmithIdeal free_smith_ideal_truncated(const ArrowObject& f, int n);
/// f^{box k}, bracketed to the left; f^{box 0} = L1 S.
ArrowObject box_power(const ArrowObject& f, int k);

struct StrongQuotientReport {
  struct Entry {
    bool weq = false;
    std::map<int, std::size_t> stable_dims;  // rank of H(Q_{s-1} (x)_R T) -> H(Q_s (x)_R T)
    std::map<int, std::size_t> target_dims;  // dim H(N)
    std::map<int, std::size_t> mapped_dims;  // rank of the stable classes in H(N)
  };
  int stages = 0;
  std::vector<Entry> entries;
};
/// Evidence only: for each right T-module N, a finite cell resolution Q of N over R, and whether
/// the classes of Q (x)_R T that persist between the last two stages map isomorphically to H(N).
StrongQuotientReport strong_quotient_check(const MonoidHom& p, const std::vector<RightModule>& modules,
                                           int stages = 3);

// ---------------------------------------------------------------------------
// Standard instances

DGAlgebra ground_algebra(const Field& f);
DGAlgebra zero_algebra(const Field& f);
/// S (+) M with M.M = 0.
DGAlgebra square_zero_extension(const ChainComplex& m);
/// F_p[x]/x^k with x in the given degree and zero differential.
DGAlgebra truncated_polynomial(const Field& f, int k, int degree = 0);
MonoidHom identity_hom(const DGAlgebra& r);
/// The ideal (x^a) of F_p[x]/x^k.
SmithIdeal polynomial_ideal(const Field& f, int k, int a, int degree = 0);
/// R = S (+) M, I = N with j : N -> M and R acting on N through the augmentation.
SmithIdeal square_zero_ideal(const ChainMap& j);
/// R = S, I = 0: the unit of the box structure.
SmithIdeal unit_smith_ideal(const Field& f);
/// The ideal given by an injective j whose image is closed under both multiplications.
SmithIdeal ideal_from_inclusion(const DGAlgebra& r, const ChainMap& j);
SmithIdeal bimodule_from_actions(const DGAlgebra& r, const ChainComplex& i, const ChainMap& left,
                                 const ChainMap& right, const ChainMap& j);
SmithIdealMap identity_ideal_map(const SmithIdeal& s);
/// j itself as a module over j.
SmithModule unit_module(const SmithIdeal& s);
SmithModule zero_module(const SmithIdeal& s);
/// V (x) M with the actions of M.
SmithModule tensor_module(const ChainComplex& v, const SmithModule& m);
SmithModule direct_sum(const SmithModule& a, const SmithModule& b);
/// V (x) R.
RightModule free_right_module(const ChainComplex& v, const DGAlgebra& r);
/// R (x) V.
LeftModule free_left_module(const ChainComplex& v, const DGAlgebra& r);
/// Cone(g : A -> B) of an R-linear map, with R acting on both summands.
RightModule cone_module(const ChainMap& g, const RightModule& a, const RightModule& b, const ChainComplex& r);
/// M with R acting through the augmentation eps : R -> S.
RightModule augmented_module(const ChainComplex& m, const DGAlgebra& r, const ChainMap& eps);

// ---------------------------------------------------------------------------
// Generators

/// S (+) M for a random M; the augmentation is the projection to S.
DGAlgebra random_square_zero(Rng& rng, const GenConfig& cfg);
ChainMap augmentation(const DGAlgebra& square_zero);
/// A square-zero Smith ideal j : N -> M; degreewise injective when requested.
SmithIdeal random_smith_ideal(Rng& rng, const GenConfig& cfg, bool injective = false);
/// A degreewise surjective monoid hom between square-zero extensions.
MonoidHom random_surjective_hom(Rng& rng, const GenConfig& cfg);
/// A map of square-zero Smith ideals.
SmithIdealMap random_ideal_map(Rng& rng, const GenConfig& cfg);
/// A module over a square-zero Smith ideal: an augmented part with random phi plus a free part.
SmithModule random_smith_module(Rng& rng, const SmithIdeal& s, const GenConfig& cfg);
/// A module over a monoid hom between square-zero extensions: free on both ends.
TensorMonoidModule random_tensor_module(Rng& rng, const MonoidHom& p, const GenConfig& cfg);

}  // namespace smith
