#include "smith/kerco.hpp"

namespace smith {

ArrowObject coker_arrow(const ArrowObject& f) { return cokernel(f).projection; }

ArrowObject ker_arrow(const ArrowObject& p) { return kernel(p).inclusion; }

ArrowSquare coker_square(const ArrowSquare& a) {
  ArrowObject s = coker_arrow(a.src), t = coker_arrow(a.dst);
  ChainMap a1 = must_factor({s}, {compose(t, a.a1)}, "coker on squares");
  return {s, t, a.a1, a1};
}

ArrowSquare ker_square(const ArrowSquare& a) {
  ArrowObject s = ker_arrow(a.src), t = ker_arrow(a.dst);
  ChainMap a0 = must_lift({t}, {compose(a.a0, s)}, "ker on squares");
  return {s, t, a0, a.a0};
}

ArrowSquare coker_ker_unit(const ArrowObject& f) {
  ArrowObject kc = ker_arrow(coker_arrow(f));
  return {f, kc, must_lift({kc}, {f}, "coker-ker unit"), ChainMap::identity(f.dst())};
}

ArrowSquare coker_ker_counit(const ArrowObject& p) {
  ArrowObject ck = coker_arrow(ker_arrow(p));
  return {ck, p, ChainMap::identity(p.src()), must_factor({ck}, {p}, "coker-ker counit")};
}

ArrowSquare transpose_to_ker(const ArrowSquare& b, const ArrowObject& f, const ArrowObject& p) {
  ArrowObject k = ker_arrow(p);
  return {f, k, must_lift({k}, {compose(b.a0, f)}, "transpose to ker"), b.a0};
}

ArrowSquare transpose_to_coker(const ArrowSquare& a, const ArrowObject& f, const ArrowObject& p) {
  ArrowObject c = coker_arrow(f);
  return {c, p, a.a1, must_factor({c}, {compose(p, a.a1)}, "transpose to coker")};
}

bool coker_ker_adjunction_check(const ArrowObject& f, const ArrowObject& p) {
  ArrowObject cf = coker_arrow(f), kp = ker_arrow(p);
  if (square_space_dim(cf, p) != square_space_dim(f, kp)) return false;
  ArrowSquare left = compose(coker_ker_counit(cf), coker_square(coker_ker_unit(f)));
  if (!same_graded_data(left, identity_square(cf))) return false;
  ArrowSquare right = compose(ker_square(coker_ker_counit(p)), coker_ker_unit(kp));
  return same_graded_data(right, identity_square(kp));
}

ArrowSquare monoidal_comparison_iso(const ArrowObject& f, const ArrowObject& g) {
  ArrowObject c = coker_arrow(pushout_product(f, g).arrow);
  ArrowObject t = tensor_arrow(coker_arrow(f), coker_arrow(g));
  ChainMap a1 = must_factor({c}, {t}, "monoidal comparison");
  ArrowSquare out{c, t, ChainMap::identity(c.src()), a1};
  if (!is_iso(out)) throw Error("monoidal comparison is not an isomorphism");
  return out;
}

ArrowSquare monoidal_comparison_inverse(const ArrowObject& f, const ArrowObject& g) {
  ArrowObject c = coker_arrow(pushout_product(f, g).arrow);
  ArrowObject t = tensor_arrow(coker_arrow(f), coker_arrow(g));
  ChainMap a1 = must_factor({t}, {c}, "monoidal comparison inverse");
  return {t, c, ChainMap::identity(t.src()), a1};
}

bool comparison_naturality_check(const ArrowSquare& a, const ArrowSquare& b) {
  ArrowSquare lhs = compose(monoidal_comparison_iso(a.dst, b.dst), coker_square(pushout_product_square(a, b)));
  ArrowSquare rhs = compose(tensor_square(coker_square(a), coker_square(b)), monoidal_comparison_iso(a.src, b.src));
  return same_graded_data(lhs, rhs);
}

ArrowSquare kernel_lax_structure(const ArrowObject& f, const ArrowObject& g) {
  ArrowObject kf = ker_arrow(f), kg = ker_arrow(g);
  ArrowObject box = pushout_product(kf, kg).arrow;
  ArrowSquare b = compose(tensor_square(coker_ker_counit(f), coker_ker_counit(g)), monoidal_comparison_iso(kf, kg));
  return transpose_to_ker(b, box, tensor_arrow(f, g));
}

}  // namespace smith
