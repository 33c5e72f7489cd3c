#pragma once

// Cokernel and kernel as functors Arr C -> Arr C, with coker left adjoint to ker.
// coker is strong monoidal from the pushout product to the tensor product; ker is lax.

#include "smith/arrow.hpp"

namespace smith {

/// coker(f : A -> B) = (B -> coker f).
ArrowObject coker_arrow(const ArrowObject& f);
/// ker(p : X -> Y) = (ker p -> X).
ArrowObject ker_arrow(const ArrowObject& p);
ArrowSquare coker_square(const ArrowSquare& a);
ArrowSquare ker_square(const ArrowSquare& a);

/// f -> ker coker f.
ArrowSquare coker_ker_unit(const ArrowObject& f);
/// coker ker p -> p.
ArrowSquare coker_ker_counit(const ArrowObject& p);
/// The square f -> ker p adjoint to b : coker f -> p.
ArrowSquare transpose_to_ker(const ArrowSquare& b, const ArrowObject& f, const ArrowObject& p);
/// The square coker f -> p adjoint to a : f -> ker p.
ArrowSquare transpose_to_coker(const ArrowSquare& a, const ArrowObject& f, const ArrowObject& p);
/// Equal dimensions of Arr(coker f, p) and Arr(f, ker p) plus both triangle identities.
bool coker_ker_adjunction_check(const ArrowObject& f, const ArrowObject& p);

/// The certified isomorphism coker(f box g) -> coker f (x) coker g.
ArrowSquare monoidal_comparison_iso(const ArrowObject& f, const ArrowObject& g);
/// Its inverse, found by the mediating-map solver.
ArrowSquare monoidal_comparison_inverse(const ArrowObject& f, const ArrowObject& g);
/// comparison o coker(a box b) = (coker a (x) coker b) o comparison.
bool comparison_naturality_check(const ArrowSquare& a, const ArrowSquare& b);

/// ker f box ker g -> ker(f (x) g), adjoint to (counit (x) counit) o comparison.
ArrowSquare kernel_lax_structure(const ArrowObject& f, const ArrowObject& g);

}  // namespace smith
