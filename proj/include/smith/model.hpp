#pragma once

// Model structures: the base structure on chain complexes over F_p and the injective and
// projective structures on Arr C. Lifting problems are linear systems.

#include <optional>

#include "smith/dga.hpp"

namespace smith {

enum class MapClass { Cofibration, TrivialCofibration, Fibration, TrivialFibration, WeakEquivalence };
enum class ArrowModel { Injective, Projective };

const char* to_string(MapClass c);
const char* to_string(ArrowModel m);

/// weq = quasi-iso, cofibration = degreewise injection, fibration = degreewise surjection.
bool classify_base(const ChainMap& f, MapClass c);

/// X0 -> X1 x_{Y1} Y0 for a square from (X0 -> X1) to (Y0 -> Y1).
ChainMap injective_fibration_corner(const ArrowSquare& a);
/// X1 u_{X0} Y0 -> Y1.
ChainMap projective_cofibration_corner(const ArrowSquare& a);

bool injective_cofibration(const ArrowSquare& a, bool trivial = false);
bool injective_fibration(const ArrowSquare& a, bool trivial = false);
bool injective_weq(const ArrowSquare& a);
bool projective_cofibration(const ArrowSquare& a, bool trivial = false);
bool projective_fibration(const ArrowSquare& a, bool trivial = false);
bool projective_weq(const ArrowSquare& a);
bool classify_arrow(ArrowModel m, const ArrowSquare& a, MapClass c);

// ---------------------------------------------------------------------------
// Lifting

/// left : A -> B, right : X -> Y, top : A -> X, bottom : B -> Y with right o top = bottom o left.
struct LiftingProblem {
  ChainMap left;
  ChainMap right;
  ChainMap top;
  ChainMap bottom;
};

struct ArrowLiftingProblem {
  ArrowSquare left;
  ArrowSquare right;
  ArrowSquare top;
  ArrowSquare bottom;
};

/// A diagonal h with h o left = top and right o h = bottom, or nullopt. Throws when the
/// outer square does not commute.
std::optional<ChainMap> solve_lifting(const LiftingProblem& prob);
std::optional<ArrowSquare> solve_lifting(const ArrowLiftingProblem& prob);

/// A uniformly random commuting outer square for the given left and right maps.
LiftingProblem random_lifting_problem(Rng& rng, const ChainMap& left, const ChainMap& right);
ArrowLiftingProblem random_lifting_problem(Rng& rng, const ArrowSquare& left, const ArrowSquare& right);

// ---------------------------------------------------------------------------
// Factorizations and replacements

enum class FactorMode { CofTrivFib, TrivCofFib };

/// f = second o first.
struct Factorization {
  ChainMap first;
  ChainMap second;
};
/// Through the mapping cylinder (CofTrivFib) or the mapping path space (TrivCofFib).
Factorization factor_map(const ChainMap& f, FactorMode mode);

struct SquareFactorization {
  ArrowSquare first;
  ArrowSquare second;
};
SquareFactorization factor_square(const ArrowSquare& a, FactorMode mode, ArrowModel model);

struct Replacement {
  ArrowObject arrow;
  ArrowSquare square;  // replacement -> original (cofibrant) or original -> replacement (fibrant)
};
/// A degreewise injection with a componentwise quasi-iso to f (projective structure).
Replacement arrow_cofibrant_replacement(const ArrowObject& f);
/// A degreewise surjection receiving a componentwise quasi-iso from p (injective structure).
Replacement arrow_fibrant_replacement(const ArrowObject& p);

struct StableAdjunct {
  bool alpha_weq = false;
  bool beta_weq = false;
  ArrowSquare beta;  // f -> ker p
};
/// f degreewise injective, p degreewise surjective, alpha : coker f -> p. Throws otherwise.
StableAdjunct stable_adjunct_check(const ArrowObject& f, const ArrowObject& p, const ArrowSquare& alpha);
/// The unit f' -> ker T(coker f') after replacing f cofibrantly and coker f' fibrantly.
ArrowSquare replaced_unit(const ArrowObject& f);

// ---------------------------------------------------------------------------
// Flatness and pure classes

/// Whether M (x)_R f is a quasi-iso for the map f : A -> B of left modules.
bool flatness_check(const DGAlgebra& r, const RightModule& m, const LeftModule& a, const LeftModule& b,
                    const ChainMap& f);
/// A finite cell module: iterated cones on maps S^{n-1} (x) R -> M given by random cycles.
RightModule random_cell_module(Rng& rng, const DGAlgebra& r, const GenConfig& cfg, int cells);

/// The pushout of the injection i along g is an injection. Throws if i is not injective.
bool pushout_stability_check(const ChainMap& i, const ChainMap& g);

/// B <-i- A -g-> C over B2 <-i2- A2 -g2-> C2, with vertical maps a, b, c.
struct GluingDiagram {
  ChainMap i, g, i2, g2;
  ChainMap a, b, c;
};
/// Throws on malformed diagrams; otherwise whether the induced map of pushouts is a quasi-iso.
bool gluing_check(const GluingDiagram& d);
GluingDiagram random_gluing_diagram(Rng& rng, const GenConfig& cfg);

/// Finite chains A_0 -> A_1 -> ... and B_0 -> B_1 -> ... of injections with vertical maps A_k -> B_k.
struct SequentialDiagram {
  std::vector<ChainMap> top;
  std::vector<ChainMap> bottom;
  std::vector<ChainMap> vertical;
};
bool sequential_check(const SequentialDiagram& d);
SequentialDiagram random_sequential_diagram(Rng& rng, const GenConfig& cfg, int length);

}  // namespace smith
