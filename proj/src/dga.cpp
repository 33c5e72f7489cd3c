#include "smith/dga.hpp"

#include <functional>

namespace smith {

namespace {

ChainMap id(const ChainComplex& x) { return ChainMap::identity(x); }
ChainMap t(const ChainMap& a, const ChainMap& b) { return tensor_map(a, b); }
bool eq(const ChainMap& a, const ChainMap& b) { return same_graded_data(a, b); }
ChainComplex unit_of(const ChainComplex& x) { return ChainComplex::unit(x.field()); }

Verdict check_shape(const ChainMap& m, const ChainComplex& src, const ChainComplex& dst, const std::string& what) {
  if (!same_graded_data(m.src(), src) || !same_graded_data(m.dst(), dst))
    throw ShapeError(what + ": wrong source or target");
  if (auto v = validate_map(m); !v) return Verdict::fail(what + ": " + v.failure);
  return Verdict::pass();
}

#define SMITH_TRY(expr)          \
  do {                           \
    if (auto v_ = (expr); !v_) return v_; \
  } while (0)

// the biproduct S (+) M underlying a square-zero extension
DirectSum sz_sum(const ChainComplex& m) { return biproduct({unit_of(m), m}); }

}  // namespace

// ---------------------------------------------------------------------------
// Validators

Verdict validate_dga(const DGAlgebra& r) {
  const ChainComplex& R = r.carrier;
  SMITH_TRY(validate_complex(R));
  SMITH_TRY(check_shape(r.mult, tensor_complex(R, R), R, "multiplication"));
  SMITH_TRY(check_shape(r.unit, unit_of(R), R, "unit"));
  if (!eq(r.mult * t(r.mult, id(R)), r.mult * t(id(R), r.mult) * associator(R, R, R)))
    return Verdict::fail("multiplication is not associative");
  if (!eq(r.mult * t(r.unit, id(R)), left_unitor(R))) return Verdict::fail("unit is not a left unit");
  if (!eq(r.mult * t(id(R), r.unit), right_unitor(R))) return Verdict::fail("unit is not a right unit");
  return Verdict::pass();
}

Verdict validate_right_module(const RightModule& m, const DGAlgebra& r) {
  const ChainComplex &M = m.carrier, &R = r.carrier;
  SMITH_TRY(validate_complex(M));
  SMITH_TRY(check_shape(m.act, tensor_complex(M, R), M, "right action"));
  if (!eq(m.act * t(m.act, id(R)), m.act * t(id(M), r.mult) * associator(M, R, R)))
    return Verdict::fail("right action is not associative");
  if (!eq(m.act * t(id(M), r.unit), right_unitor(M))) return Verdict::fail("right action is not unital");
  return Verdict::pass();
}

Verdict validate_left_module(const LeftModule& m, const DGAlgebra& r) {
  const ChainComplex &M = m.carrier, &R = r.carrier;
  SMITH_TRY(validate_complex(M));
  SMITH_TRY(check_shape(m.act, tensor_complex(R, M), M, "left action"));
  if (!eq(m.act * t(r.mult, id(M)), m.act * t(id(R), m.act) * associator(R, R, M)))
    return Verdict::fail("left action is not associative");
  if (!eq(m.act * t(r.unit, id(M)), left_unitor(M))) return Verdict::fail("left action is not unital");
  return Verdict::pass();
}

Verdict validate_bimodule(const DGBimodule& m, const DGAlgebra& r) {
  SMITH_TRY(validate_left_module({m.carrier, m.left}, r));
  SMITH_TRY(validate_right_module({m.carrier, m.right}, r));
  const ChainComplex &I = m.carrier, &R = r.carrier;
  if (!eq(m.right * t(m.left, id(R)), m.left * t(id(R), m.right) * associator(R, I, R)))
    return Verdict::fail("left and right actions do not commute");
  return Verdict::pass();
}

Verdict validate_monoid_hom(const MonoidHom& p) {
  SMITH_TRY(validate_dga(p.src));
  SMITH_TRY(validate_dga(p.dst));
  SMITH_TRY(check_shape(p.map, p.src.carrier, p.dst.carrier, "monoid map"));
  if (!eq(p.map * p.src.mult, p.dst.mult * t(p.map, p.map))) return Verdict::fail("map does not preserve products");
  if (!eq(p.map * p.src.unit, p.dst.unit)) return Verdict::fail("map does not preserve the unit");
  return Verdict::pass();
}

Verdict validate_smith_ideal(const SmithIdeal& s) {
  SMITH_TRY(validate_dga(s.alg));
  SMITH_TRY(validate_bimodule(s.ideal, s.alg));
  const ChainComplex &I = s.ideal.carrier, &R = s.alg.carrier;
  SMITH_TRY(check_shape(s.j, I, R, "ideal map"));
  if (!eq(s.j * s.ideal.left, s.alg.mult * t(id(R), s.j))) return Verdict::fail("j is not left linear");
  if (!eq(s.j * s.ideal.right, s.alg.mult * t(s.j, id(R)))) return Verdict::fail("j is not right linear");
  if (!eq(s.ideal.left * t(s.j, id(I)), s.ideal.right * t(id(I), s.j)))
    return Verdict::fail("the two actions disagree on I (x) I");
  return Verdict::pass();
}

Verdict validate_smith_ideal_map(const SmithIdealMap& a) {
  SMITH_TRY(validate_smith_ideal(a.src));
  SMITH_TRY(validate_smith_ideal(a.dst));
  SMITH_TRY(validate_monoid_hom({a.src.alg, a.dst.alg, a.a1}));
  SMITH_TRY(check_shape(a.a0, a.src.ideal.carrier, a.dst.ideal.carrier, "ideal component"));
  if (!eq(a.a0 * a.src.ideal.left, a.dst.ideal.left * t(a.a1, a.a0)))
    return Verdict::fail("ideal component is not left linear");
  if (!eq(a.a0 * a.src.ideal.right, a.dst.ideal.right * t(a.a0, a.a1)))
    return Verdict::fail("ideal component is not right linear");
  if (!eq(a.a1 * a.src.j, a.dst.j * a.a0)) return Verdict::fail("square with j does not commute");
  return Verdict::pass();
}

Verdict validate_smith_module(const SmithModule& m) {
  const SmithIdeal& s = m.over;
  const ChainComplex &R = s.alg.carrier, &I = s.ideal.carrier;
  const ChainComplex &M0 = m.m0.carrier, &M1 = m.m1.carrier;
  SMITH_TRY(validate_right_module(m.m0, s.alg));
  SMITH_TRY(validate_right_module(m.m1, s.alg));
  SMITH_TRY(check_shape(m.f, M0, M1, "module arrow"));
  SMITH_TRY(check_shape(m.phi, tensor_complex(M1, I), M0, "ideal action"));
  if (!eq(m.f * m.m0.act, m.m1.act * t(m.f, id(R)))) return Verdict::fail("arrow is not R-linear");
  if (!eq(m.phi * t(m.m1.act, id(I)), m.phi * t(id(M1), s.ideal.left) * associator(M1, R, I)))
    return Verdict::fail("ideal action does not descend to the balanced tensor");
  if (!eq(m.phi * t(id(M1), s.ideal.right) * associator(M1, I, R), m.m0.act * t(m.phi, id(R))))
    return Verdict::fail("ideal action is not R-linear");
  if (!eq(m.f * m.phi, m.m1.act * t(id(M1), s.j))) return Verdict::fail("f o phi differs from the action of j");
  if (!eq(m.phi * t(m.f, id(I)), m.m0.act * t(id(M0), s.j)))
    return Verdict::fail("phi o (f (x) 1) differs from the action of j");
  return Verdict::pass();
}

Verdict validate_tensor_module(const TensorMonoidModule& m) {
  SMITH_TRY(validate_monoid_hom(m.over));
  SMITH_TRY(validate_right_module(m.m0, m.over.src));
  SMITH_TRY(validate_right_module(m.m1, m.over.dst));
  SMITH_TRY(check_shape(m.f, m.m0.carrier, m.m1.carrier, "module arrow"));
  if (!eq(m.f * m.m0.act, m.m1.act * t(m.f, m.over.map))) return Verdict::fail("arrow is not linear over the map");
  return Verdict::pass();
}

Verdict validate_square_monoid(const SquareMonoid& m) {
  const ArrowObject& j = m.arrow;
  SMITH_TRY(validate_map(j));
  PushoutProduct pp = pushout_product(j, j);
  if (!same_arrow(m.mult.src, pp.arrow) || !same_arrow(m.mult.dst, j))
    throw ShapeError("box multiplication: wrong source or target");
  if (!same_arrow(m.unit.src, L1(unit_of(j.src()))) || !same_arrow(m.unit.dst, j))
    throw ShapeError("box unit: wrong source or target");
  if (auto v = validate_square(m.mult); !v) return Verdict::fail("box multiplication: " + v.failure);
  if (auto v = validate_square(m.unit); !v) return Verdict::fail("box unit: " + v.failure);
  ArrowSquare idj = identity_square(j);
  ArrowSquare lhs = compose(m.mult, pushout_product_square(m.mult, idj));
  ArrowSquare rhs = compose(compose(m.mult, pushout_product_square(idj, m.mult)), box_associator(j, j, j));
  if (!same_graded_data(lhs, rhs)) return Verdict::fail("box multiplication is not associative");
  if (!same_graded_data(compose(m.mult, pushout_product_square(m.unit, idj)), box_left_unitor(j)))
    return Verdict::fail("box unit is not a left unit");
  if (!same_graded_data(compose(m.mult, pushout_product_square(idj, m.unit)), box_right_unitor(j)))
    return Verdict::fail("box unit is not a right unit");
  return Verdict::pass();
}

Verdict validate_square_module(const SquareModule& m, const SquareMonoid& over) {
  const ArrowObject &f = m.arrow, &j = over.arrow;
  SMITH_TRY(validate_map(f));
  if (!same_arrow(m.act.src, pushout_product(f, j).arrow) || !same_arrow(m.act.dst, f))
    throw ShapeError("box action: wrong source or target");
  if (auto v = validate_square(m.act); !v) return Verdict::fail("box action: " + v.failure);
  ArrowSquare lhs = compose(m.act, pushout_product_square(m.act, identity_square(j)));
  ArrowSquare rhs =
      compose(compose(m.act, pushout_product_square(identity_square(f), over.mult)), box_associator(f, j, j));
  if (!same_graded_data(lhs, rhs)) return Verdict::fail("box action is not associative");
  if (!same_graded_data(compose(m.act, pushout_product_square(identity_square(f), over.unit)), box_right_unitor(f)))
    return Verdict::fail("box action is not unital");
  return Verdict::pass();
}

bool same_data(const DGAlgebra& a, const DGAlgebra& b) {
  return same_graded_data(a.carrier, b.carrier) && eq(a.mult, b.mult) && eq(a.unit, b.unit);
}

bool same_data(const SmithIdeal& a, const SmithIdeal& b) {
  return same_data(a.alg, b.alg) && same_graded_data(a.ideal.carrier, b.ideal.carrier) &&
         eq(a.ideal.left, b.ideal.left) && eq(a.ideal.right, b.ideal.right) && eq(a.j, b.j);
}

bool same_data(const SmithModule& a, const SmithModule& b) {
  return same_data(a.over, b.over) && eq(a.m0.act, b.m0.act) && eq(a.m1.act, b.m1.act) && eq(a.f, b.f) &&
         eq(a.phi, b.phi);
}

bool same_data(const SquareMonoid& a, const SquareMonoid& b) {
  return same_arrow(a.arrow, b.arrow) && same_graded_data(a.mult, b.mult) && same_graded_data(a.unit, b.unit);
}

bool same_data(const SquareModule& a, const SquareModule& b) {
  return same_arrow(a.arrow, b.arrow) && same_graded_data(a.act, b.act);
}

// ---------------------------------------------------------------------------
// Unwinding

SquareMonoid smith_to_square_monoid(const SmithIdeal& s) {
  PushoutProduct pp = pushout_product(s.j, s.j);
  auto a0 = factor_through({pp.domain.from_b, pp.domain.from_c}, {s.ideal.right, s.ideal.left});
  if (!a0) throw Error("smith ideal: the two actions disagree on I (x) I");
  const ChainComplex S = unit_of(s.alg.carrier);
  ArrowObject l1 = L1(S);
  ArrowSquare mult{pp.arrow, s.j, *a0, s.alg.mult};
  ArrowSquare unit{l1, s.j, ChainMap::zero(l1.src(), s.j.src()), s.alg.unit};
  return {s.j, mult, unit};
}

SmithIdeal smith_from_square_monoid(const SquareMonoid& m) {
  PushoutProduct pp = pushout_product(m.arrow, m.arrow);
  ChainMap right = m.mult.a0 * pp.domain.from_b;
  ChainMap left = m.mult.a0 * pp.domain.from_c;
  DGAlgebra alg{m.arrow.dst(), m.mult.a1, m.unit.a1};
  return {alg, {m.arrow.src(), left, right}, m.arrow};
}

SquareModule module_to_square_action(const SmithModule& m) {
  PushoutProduct pp = pushout_product(m.f, m.over.j);
  auto a0 = factor_through({pp.domain.from_b, pp.domain.from_c}, {m.m0.act, m.phi});
  if (!a0) throw Error("smith module: act0 and phi do not glue along M0 (x) I");
  return {m.f, {pp.arrow, m.f, *a0, m.m1.act}};
}

SmithModule module_from_square_action(const SmithIdeal& over, const SquareModule& m) {
  PushoutProduct pp = pushout_product(m.arrow, over.j);
  RightModule m0{m.arrow.src(), m.act.a0 * pp.domain.from_b};
  RightModule m1{m.arrow.dst(), m.act.a1};
  return {over, m0, m1, m.arrow, m.act.a0 * pp.domain.from_c};
}

RelativeTensor relative_tensor(const RightModule& m, const LeftModule& n, const ChainComplex& r) {
  const ChainComplex &M = m.carrier, &N = n.carrier;
  ChainMap rel = t(m.act, id(N)) - t(id(M), n.act) * associator(M, r, N);
  Cokernel c = cokernel(rel);
  return {c.object, c.projection};
}

LeftModule as_left_module(const DGAlgebra& r) { return {r.carrier, r.mult}; }
RightModule as_right_module(const DGAlgebra& r) { return {r.carrier, r.mult}; }

ChainMap descended_phi(const SmithModule& m) {
  const SmithIdeal& s = m.over;
  RelativeTensor rt = relative_tensor(m.m1, {s.ideal.carrier, s.ideal.left}, s.alg.carrier);
  return must_factor({rt.quotient}, {m.phi}, "descended phi");
}

// ---------------------------------------------------------------------------
// Quotients and kernels

MonoidHom quotient_dga(const SmithIdeal& s) {
  SquareMonoid sq = smith_to_square_monoid(s);
  ArrowSquare cm = coker_square(sq.mult);
  ArrowSquare inv = monoidal_comparison_inverse(s.j, s.j);
  ChainMap pi = coker_arrow(s.j);
  DGAlgebra q{pi.dst(), cm.a1 * inv.a1, pi * s.alg.unit};
  MonoidHom out{s.alg, q, pi};
  if (auto v = validate_monoid_hom(out); !v) throw Error("quotient algebra: " + v.failure);
  return out;
}

SmithIdeal kernel_smith_ideal(const MonoidHom& p) {
  const ChainComplex S = unit_of(p.src.carrier);
  ArrowObject kp = ker_arrow(p.map);
  ArrowSquare lax = kernel_lax_structure(p.map, p.map);
  ArrowSquare msq{tensor_arrow(p.map, p.map), p.map, p.src.mult, p.dst.mult};
  ArrowSquare mult = compose(ker_square(msq), lax);
  ArrowObject cl = coker_arrow(L1(S));
  ArrowSquare u{cl, p.map, retype(p.src.unit, cl.src(), p.src.carrier), retype(p.dst.unit, cl.dst(), p.dst.carrier)};
  ArrowSquare unit = transpose_to_ker(u, L1(S), p.map);
  SmithIdeal out = smith_from_square_monoid({kp, mult, unit});
  if (auto v = validate_smith_ideal(out); !v) throw Error("kernel ideal: " + v.failure);
  return out;
}

TensorMonoidModule module_coker(const SmithModule& m) {
  SquareModule sm = module_to_square_action(m);
  ArrowSquare act = compose(coker_square(sm.act), monoidal_comparison_inverse(m.f, m.over.j));
  MonoidHom q = quotient_dga(m.over);
  TensorMonoidModule out{q, {m.m1.carrier, act.a0}, {act.dst.dst(), act.a1}, act.dst};
  if (auto v = validate_tensor_module(out); !v) throw Error("cokernel module: " + v.failure);
  return out;
}

SmithModule module_ker(const TensorMonoidModule& n) {
  const ChainMap& g = n.f;
  SmithIdeal s = kernel_smith_ideal(n.over);
  ArrowSquare a{tensor_arrow(g, n.over.map), g, n.m0.act, n.m1.act};
  ArrowSquare mu = compose(ker_square(a), kernel_lax_structure(g, n.over.map));
  SmithModule out = module_from_square_action(s, {ker_arrow(g), mu});
  if (auto v = validate_smith_module(out); !v) throw Error("kernel module: " + v.failure);
  return out;
}

// ---------------------------------------------------------------------------
// Change of scalars

SmithModule restrict_scalars(const SmithIdealMap& a, const SmithModule& n) {
  const ChainComplex &N0 = n.m0.carrier, &N1 = n.m1.carrier;
  return {a.src,
          {N0, n.m0.act * t(id(N0), a.a1)},
          {N1, n.m1.act * t(id(N1), a.a1)},
          n.f,
          n.phi * t(id(N1), a.a0)};
}

Extension extend_scalars_detailed(const SmithIdealMap& a, const SmithModule& m) {
  const SmithIdeal &s = a.src, &u = a.dst;
  const ChainComplex &R = s.alg.carrier, &I = s.ideal.carrier;
  const ChainComplex &R2 = u.alg.carrier, &I2 = u.ideal.carrier;
  const ChainComplex &M0 = m.m0.carrier, &M1 = m.m1.carrier;
  // R' and I' as left R-modules through a1
  LeftModule r2{R2, u.alg.mult * t(a.a1, id(R2))};
  LeftModule i2{I2, u.ideal.left * t(a.a1, id(I2))};
  RelativeTensor b = relative_tensor(m.m0, r2, R);
  RelativeTensor c = relative_tensor(m.m1, i2, R);
  RelativeTensor e1 = relative_tensor(m.m1, r2, R);

  // M0 (x) I' (+) (M1 (x) I) (x) R' glued into B and C
  DirectSum src = biproduct({tensor_complex(M0, I2), tensor_complex(tensor_complex(M1, I), R2)});
  ChainMap leg_b = copair(src, {b.quotient * t(id(M0), u.j), b.quotient * t(m.phi, id(R2))});
  ChainMap ia = u.ideal.right * t(a.a0, id(R2));  // I (x) R' -> I'
  ChainMap leg_c = copair(src, {c.quotient * t(m.f, id(I2)), c.quotient * t(id(M1), ia) * associator(M1, I, R2)});
  Pushout glue = pushout(leg_b, leg_c);

  ChainMap fb = must_factor({b.quotient}, {e1.quotient * t(m.f, id(R2))}, "extended arrow on M0 part");
  ChainMap fc = must_factor({c.quotient}, {e1.quotient * t(id(M1), u.j)}, "extended arrow on M1 part");
  ChainMap f_ext = glue.mediate(fb, fc);

  // right actions of R' on the pieces
  auto act_on = [&](const RelativeTensor& rt, const ChainComplex& m_, const ChainComplex& x,
                    const ChainMap& xact) {
    ChainComplex qx = rt.object;
    ChainMap lhs = rt.quotient * t(id(m_), xact) * associator(m_, x, R2);
    return must_factor({t(rt.quotient, id(R2))}, {lhs}, "extended action");
  };
  ChainMap act_b = act_on(b, M0, R2, u.alg.mult);
  ChainMap act_c = act_on(c, M1, I2, u.ideal.right);
  ChainMap act_e1 = act_on(e1, M1, R2, u.alg.mult);
  ChainComplex G = glue.object;
  ChainMap act_g = must_factor({t(glue.from_b, id(R2)), t(glue.from_c, id(R2))},
                               {glue.from_b * act_b, glue.from_c * act_c}, "extended action on the glued part");
  ChainMap phi_ext = must_factor({t(e1.quotient, id(I2))},
                                 {glue.from_c * c.quotient * t(id(M1), u.ideal.left) * associator(M1, R2, I2)},
                                 "extended ideal action");
  SmithModule out{u, {G, act_g}, {e1.object, act_e1}, f_ext, phi_ext};
  return {out, b, c, e1, glue};
}

SmithModule extend_scalars(const SmithIdealMap& a, const SmithModule& m) {
  SmithModule out = extend_scalars_detailed(a, m).module;
  if (auto v = validate_smith_module(out); !v) throw Error("extended module: " + v.failure);
  return out;
}

ExtensionOracle extend_scalars_oracle(const SmithIdealMap& a, const SmithModule& m) {
  const SmithIdeal &s = a.src, &u = a.dst;
  SquareModule sm = module_to_square_action(m);
  SquareMonoid um = smith_to_square_monoid(u);
  ArrowSquare alpha{s.j, u.j, a.a0, a.a1};
  ArrowSquare lam = compose(um.mult, pushout_product_square(alpha, identity_square(u.j)));
  ArrowSquare map1 = pushout_product_square(sm.act, identity_square(u.j));
  ArrowSquare map2 = compose(pushout_product_square(identity_square(m.f), lam), box_associator(m.f, s.j, u.j));
  const std::uint32_t p = m.f.field().p();
  ArrowSquare diff = map1 + scaled(map2, p - 1);
  Cokernel c0 = cokernel(diff.a0), c1 = cokernel(diff.a1);
  PushoutProduct target = pushout_product(m.f, u.j);
  ChainMap arrow = must_factor({c0.projection}, {c1.projection * target.arrow}, "oracle arrow");
  return {arrow, target, c0.projection, c1.projection};
}

ArrowSquare extension_comparison(const SmithIdealMap& a, const SmithModule& m) {
  Extension e = extend_scalars_detailed(a, m);
  ExtensionOracle o = extend_scalars_oracle(a, m);
  ChainMap a1 = must_factor({e.m1_r.quotient}, {o.proj1}, "comparison on targets");
  ChainMap a0 = must_factor({e.glue.from_b * e.m0_r.quotient, e.glue.from_c * e.m1_i.quotient},
                            {o.proj0 * o.target.domain.from_b, o.proj0 * o.target.domain.from_c},
                            "comparison on sources");
  ArrowSquare out{e.module.f, o.arrow, a0, a1};
  if (auto v = validate_square(out); !v) throw Error("extension comparison: " + v.failure);
  if (!is_iso(out)) throw Error("extension comparison is not an isomorphism");
  return out;
}

namespace {

// terms for  left . (X (x) 1_Y)_n  with X an unknown map A -> B; ta = A (x) Y
void add_tensor_id_terms(std::vector<LinearSystem::Term>& terms, const MapUnknown& x, const ChainComplex& y,
                         const ChainComplex& ta, int n, const Matrix& left) {
  const ChainComplex &a = x.src(), &b = x.dst();
  const Field& f = a.field();
  for (int i = a.lo(); i <= a.hi(); ++i) {
    auto uid = x.at(i);
    if (!uid) continue;
    const std::size_t k = y.dim(n - i);
    if (!k) continue;
    const std::size_t ra = a.dim(i) * k, rb = b.dim(i) * k;
    const std::size_t off_a = tensor_offset(a, y, n, i), off_b = tensor_offset(b, y, n, i);
    Matrix sel(f, ra, ta.dim(n));
    for (std::size_t q = 0; q < ra; ++q) sel(q, off_a + q) = 1;
    terms.push_back({left.block(0, off_b, left.rows(), rb), *uid, sel, LinearSystem::Shape::KronRight, k});
  }
}

// h . act_src = act_dst . (h (x) 1)
void add_linearity(LinearSystem& sys, const MapUnknown& h, const ChainMap& act_src, const ChainMap& act_dst,
                   const ChainComplex& y) {
  const ChainComplex& ts = act_src.src();
  const Field& f = ts.field();
  for (int n = ts.lo(); n <= ts.hi(); ++n) {
    const std::size_t rows = h.dst().dim(n), cols = ts.dim(n);
    if (!rows || !cols) continue;
    std::vector<LinearSystem::Term> terms;
    add_terms(terms, h, n, Matrix(), act_src.comp(n));
    add_tensor_id_terms(terms, h, y, ts, n, -act_dst.comp(n));
    if (!terms.empty()) sys.add_equation(terms, Matrix(f, rows, cols));
  }
}

}  // namespace

std::size_t module_hom_dim(const SmithModule& m, const SmithModule& n) {
  const Field& f = m.f.field();
  const ChainComplex &R = m.over.alg.carrier, &I = m.over.ideal.carrier;
  LinearSystem sys(f);
  MapUnknown h0(sys, m.m0.carrier, n.m0.carrier), h1(sys, m.m1.carrier, n.m1.carrier);
  h0.add_chain_conditions(sys);
  h1.add_chain_conditions(sys);
  add_linearity(sys, h0, m.m0.act, n.m0.act, R);
  add_linearity(sys, h1, m.m1.act, n.m1.act, R);
  const ChainComplex& M0 = m.m0.carrier;
  for (int d = M0.lo(); d <= M0.hi(); ++d) {
    const std::size_t rows = n.m1.carrier.dim(d), cols = M0.dim(d);
    if (!rows || !cols) continue;
    std::vector<LinearSystem::Term> terms;
    add_terms(terms, h0, d, n.f.comp(d), Matrix());
    add_terms(terms, h1, d, Matrix(), -m.f.comp(d));
    if (!terms.empty()) sys.add_equation(terms, Matrix(f, rows, cols));
  }
  // h0 . phi_M = phi_N . (h1 (x) 1_I)
  const ChainComplex& ts = m.phi.src();
  for (int d = ts.lo(); d <= ts.hi(); ++d) {
    const std::size_t rows = n.m0.carrier.dim(d), cols = ts.dim(d);
    if (!rows || !cols) continue;
    std::vector<LinearSystem::Term> terms;
    add_terms(terms, h0, d, Matrix(), m.phi.comp(d));
    add_tensor_id_terms(terms, h1, I, ts, d, -n.phi.comp(d));
    if (!terms.empty()) sys.add_equation(terms, Matrix(f, rows, cols));
  }
  return sys.nullity();
}

// ---------------------------------------------------------------------------
// Free monoids

ArrowObject box_power(const ArrowObject& f, int k) {
  if (k <= 0) return L1(unit_of(f.src()));
  ArrowObject out = f;
  for (int i = 1; i < k; ++i) out = pushout_product(out, f).arrow;
  return out;
}

SmithIdeal free_smith_ideal_truncated(const ArrowObject& f, int n) {
  n = std::max(n, 0);
  std::vector<ArrowObject> pw;
  for (int k = 0; k <= n; ++k)
    pw.push_back(k == 0 ? L1(unit_of(f.src())) : k == 1 ? f : pushout_product(pw.back(), f).arrow);

  std::map<std::pair<int, int>, ArrowSquare> memo;
  std::function<ArrowSquare(int, int)> prod = [&](int a, int b) -> ArrowSquare {
    if (a == 0) return box_left_unitor(pw[b]);
    if (b == 0) return box_right_unitor(pw[a]);
    if (b == 1) return identity_square(pushout_product(pw[a], f).arrow);
    if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
    ArrowSquare inner = pushout_product_square(prod(a, b - 1), identity_square(f));
    ArrowSquare out = compose(inner, inverse_iso(box_associator(pw[a], pw[b - 1], f)));
    memo.emplace(std::make_pair(a, b), out);
    return out;
  };

  std::vector<ChainComplex> rp, ip;
  for (auto& w : pw) {
    rp.push_back(w.dst());
    ip.push_back(w.src());
  }
  DirectSum R = biproduct(rp), I = biproduct(ip);
  ChainMap j = direct_sum_map(I, R, pw);
  ChainMap mult = ChainMap::zero(tensor_complex(R.object, R.object), R.object);
  ChainMap right = ChainMap::zero(tensor_complex(I.object, R.object), I.object);
  ChainMap left = ChainMap::zero(tensor_complex(R.object, I.object), I.object);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      ArrowSquare m = prod(a, b);
      PushoutProduct pp = pushout_product(pw[a], pw[b]);
      const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b),
                 uab = static_cast<std::size_t>(a + b);
      mult = mult + R.inclusions[uab] * m.a1 * t(R.projections[ua], R.projections[ub]);
      right = right + I.inclusions[uab] * m.a0 * pp.domain.from_b * t(I.projections[ua], R.projections[ub]);
      left = left + I.inclusions[uab] * m.a0 * pp.domain.from_c * t(R.projections[ua], I.projections[ub]);
    }
  DGAlgebra alg{R.object, mult, R.inclusions[0]};
  return {alg, {I.object, left, right}, j};
}

// ---------------------------------------------------------------------------
// Strong quotients

RightModule cone_module(const ChainMap& g, const RightModule& a, const RightModule& b, const ChainComplex& r) {
  const ChainComplex C = cone(g).object;
  const ChainComplex &A = a.carrier, &B = b.carrier;
  const ChainComplex CR = tensor_complex(C, r);
  const Field& f = C.field();
  std::map<int, Matrix> comps;
  for (int n = CR.lo(); n <= CR.hi(); ++n) {
    Matrix m(f, C.dim(n), CR.dim(n));
    if (m.empty()) continue;
    for (int i = C.lo(); i <= C.hi(); ++i) {
      const std::size_t k = r.dim(n - i);
      if (!k || !C.dim(i)) continue;
      const std::size_t off = tensor_offset(C, r, n, i);
      const std::size_t nb = B.dim(i), na = A.dim(i - 1);
      if (nb) {
        Matrix act = b.act.comp(n);
        const std::size_t ob = tensor_offset(B, r, n, i);
        for (std::size_t q = 0; q < nb * k; ++q)
          for (std::size_t row = 0; row < B.dim(n); ++row) m(row, off + q) = act(row, ob + q);
      }
      if (na) {
        Matrix act = a.act.comp(n - 1);
        const std::size_t oa = tensor_offset(A, r, n - 1, i - 1);
        for (std::size_t q = 0; q < na * k; ++q)
          for (std::size_t row = 0; row < A.dim(n - 1); ++row) m(B.dim(n) + row, off + nb * k + q) = act(row, oa + q);
      }
    }
    comps.emplace(n, std::move(m));
  }
  return {C, ChainMap(CR, C, comps)};
}

namespace {

RightModule free_on(const ChainComplex& v, const DGAlgebra& r) { return free_right_module(v, r); }

}  // namespace

StrongQuotientReport strong_quotient_check(const MonoidHom& p, const std::vector<RightModule>& modules, int stages) {
  stages = std::max(stages, 1);
  const DGAlgebra &R = p.src, &T = p.dst;
  LeftModule tl{T.carrier, T.mult * t(p.map, id(T.carrier))};
  StrongQuotientReport report;
  report.stages = stages;
  for (const RightModule& n : modules) {
    const ChainComplex& N = n.carrier;
    RightModule q = free_on(N, R);
    ChainMap eps = n.act * t(id(N), p.map);
    ChainMap last_inc;
    for (int s = 1; s <= stages; ++s) {
      Kernel k = kernel(eps);
      ChainMap g = q.act * t(k.inclusion, id(R.carrier));
      RightModule fk = free_on(k.object, R);
      RightModule next = cone_module(g, fk, q, R.carrier);
      Cone c = cone(g);
      std::map<int, Matrix> ec;
      for (int d = next.carrier.lo(); d <= next.carrier.hi(); ++d) {
        Matrix m(eps.field(), N.dim(d), next.carrier.dim(d));
        if (!m.empty() && q.carrier.dim(d)) m.set_block(0, 0, eps.comp(d));
        ec.emplace(d, std::move(m));
      }
      if (s == stages) last_inc = retype(c.inclusion, q.carrier, next.carrier);
      eps = ChainMap(next.carrier, N, ec);
      if (s < stages) q = next;
      else {
        RelativeTensor a = relative_tensor(q, tl, R.carrier);
        RelativeTensor b = relative_tensor(next, tl, R.carrier);
        ChainMap u = must_factor({a.quotient}, {b.quotient * t(last_inc, id(T.carrier))}, "stage map");
        ChainMap v = must_factor({b.quotient}, {n.act * t(eps, id(T.carrier))}, "augmentation");
        ChainMap vu = v * u;
        HomologyReport ha = homology(a.object), hb = homology(b.object), hn = homology(N);
        StrongQuotientReport::Entry e;
        e.weq = true;
        const int lo = std::min(a.object.lo(), N.lo()), hi = std::max(a.object.hi(), N.hi());
        for (int d = lo; d <= hi; ++d) {
          const std::size_t su = rank(induced_on_homology(u, d, ha, hb));
          const std::size_t sv = rank(induced_on_homology(vu, d, ha, hn));
          const std::size_t tn = hn.dim(d);
          if (su || tn) {
            e.stable_dims[d] = su;
            e.mapped_dims[d] = sv;
            e.target_dims[d] = tn;
          }
          if (su != sv || sv != tn) e.weq = false;
        }
        report.entries.push_back(std::move(e));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Instances

DGAlgebra ground_algebra(const Field& f) {
  ChainComplex s = ChainComplex::unit(f);
  return {s, left_unitor(s), id(s)};
}

DGAlgebra zero_algebra(const Field& f) {
  ChainComplex z = ChainComplex::zero(f), s = ChainComplex::unit(f);
  return {z, ChainMap::zero(tensor_complex(z, z), z), ChainMap::zero(s, z)};
}

DGAlgebra square_zero_extension(const ChainComplex& m) {
  DirectSum d = sz_sum(m);
  const ChainComplex S = unit_of(m);
  const ChainMap &is = d.inclusions[0], &im = d.inclusions[1], &ps = d.projections[0], &pm = d.projections[1];
  ChainMap mult = is * left_unitor(S) * t(ps, ps) + im * left_unitor(m) * t(ps, pm) + im * right_unitor(m) * t(pm, ps);
  return {d.object, mult, is};
}

namespace {

struct Truncated {
  ChainComplex carrier;
  int deg;
  // degree and index of x^a
  std::pair<int, std::size_t> where(int a) const {
    return deg == 0 ? std::make_pair(0, static_cast<std::size_t>(a)) : std::make_pair(a * deg, std::size_t{0});
  }
};

Truncated truncated_carrier(const Field& f, int k, int deg, int from = 0) {
  std::map<int, std::size_t> dims;
  for (int a = from; a < k; ++a) dims[a * deg] += 1;
  if (dims.empty()) return {ChainComplex::zero(f), deg};
  int lo = dims.begin()->first, hi = dims.rbegin()->first;
  return {ChainComplex::from_maps(f, lo, hi, dims, {}), deg};
}

}  // namespace

DGAlgebra truncated_polynomial(const Field& f, int k, int degree) {
  if (k < 1) throw Error("truncated polynomial: need k >= 1");
  Truncated tr = truncated_carrier(f, k, degree);
  const ChainComplex& R = tr.carrier;
  ChainComplex RR = tensor_complex(R, R);
  std::map<int, Matrix> comps;
  for (int n = RR.lo(); n <= RR.hi(); ++n) comps.emplace(n, Matrix(f, R.dim(n), RR.dim(n)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; a + b < k; ++b) {
      auto [da, ia] = tr.where(a);
      auto [db, ib] = tr.where(b);
      auto [dc, ic] = tr.where(a + b);
      const int n = da + db;
      const std::size_t col = tensor_offset(R, R, n, da) + ia * R.dim(db) + ib;
      comps.at(n)(ic, col) = 1;
      (void)dc;
    }
  Matrix e(f, R.dim(0), 1);
  e(tr.where(0).second, 0) = 1;
  return {R, ChainMap(RR, R, comps), ChainMap(ChainComplex::unit(f), R, {{0, e}})};
}

MonoidHom identity_hom(const DGAlgebra& r) { return {r, r, id(r.carrier)}; }

SmithIdeal ideal_from_inclusion(const DGAlgebra& r, const ChainMap& j) {
  const ChainComplex& I = j.src();
  ChainMap left = must_lift({j}, {r.mult * t(id(r.carrier), j)}, "left ideal action");
  ChainMap right = must_lift({j}, {r.mult * t(j, id(r.carrier))}, "right ideal action");
  return {r, {I, left, right}, j};
}

SmithIdeal polynomial_ideal(const Field& f, int k, int a, int degree) {
  DGAlgebra r = truncated_polynomial(f, k, degree);
  Truncated full{r.carrier, degree};
  Truncated sub = truncated_carrier(f, k, degree, a);
  std::map<int, Matrix> comps;
  std::map<int, std::size_t> used;
  for (int b = std::max(a, 0); b < k; ++b) {
    auto [d, idx] = full.where(b);
    auto it = comps.find(d);
    if (it == comps.end()) it = comps.emplace(d, Matrix(f, r.carrier.dim(d), sub.carrier.dim(d))).first;
    it->second(idx, used[d]++) = 1;
  }
  return ideal_from_inclusion(r, ChainMap(sub.carrier, r.carrier, comps));
}

SmithIdeal square_zero_ideal(const ChainMap& j) {
  const ChainComplex &N = j.src(), &M = j.dst();
  DGAlgebra r = square_zero_extension(M);
  ChainMap eps = augmentation(r);
  DirectSum d = sz_sum(M);
  ChainMap left = left_unitor(N) * t(eps, id(N));
  ChainMap right = right_unitor(N) * t(id(N), eps);
  return {r, {N, left, right}, retype(d.inclusions[1] * j, N, r.carrier)};
}

SmithIdeal unit_smith_ideal(const Field& f) {
  DGAlgebra r = ground_algebra(f);
  ChainComplex z = ChainComplex::zero(f);
  return {r,
          {z, ChainMap::zero(tensor_complex(r.carrier, z), z), ChainMap::zero(tensor_complex(z, r.carrier), z)},
          ChainMap::zero(z, r.carrier)};
}

SmithIdeal bimodule_from_actions(const DGAlgebra& r, const ChainComplex& i, const ChainMap& left,
                                 const ChainMap& right, const ChainMap& j) {
  return {r, {i, left, right}, j};
}

SmithIdealMap identity_ideal_map(const SmithIdeal& s) {
  return {s, s, id(s.ideal.carrier), id(s.alg.carrier)};
}

SmithModule unit_module(const SmithIdeal& s) {
  return {s, {s.ideal.carrier, s.ideal.right}, {s.alg.carrier, s.alg.mult}, s.j, s.ideal.left};
}

SmithModule zero_module(const SmithIdeal& s) {
  const ChainComplex z = ChainComplex::zero(s.alg.carrier.field());
  const ChainComplex &R = s.alg.carrier, &I = s.ideal.carrier;
  return {s,
          {z, ChainMap::zero(tensor_complex(z, R), z)},
          {z, ChainMap::zero(tensor_complex(z, R), z)},
          ChainMap::zero(z, z),
          ChainMap::zero(tensor_complex(z, I), z)};
}

SmithModule tensor_module(const ChainComplex& v, const SmithModule& m) {
  const ChainComplex &R = m.over.alg.carrier, &I = m.over.ideal.carrier;
  const ChainComplex &M0 = m.m0.carrier, &M1 = m.m1.carrier;
  ChainComplex v0 = tensor_complex(v, M0), v1 = tensor_complex(v, M1);
  return {m.over,
          {v0, t(id(v), m.m0.act) * associator(v, M0, R)},
          {v1, t(id(v), m.m1.act) * associator(v, M1, R)},
          t(id(v), m.f),
          t(id(v), m.phi) * associator(v, M1, I)};
}

SmithModule direct_sum(const SmithModule& a, const SmithModule& b) {
  const ChainComplex &R = a.over.alg.carrier, &I = a.over.ideal.carrier;
  DirectSum s0 = biproduct({a.m0.carrier, b.m0.carrier}), s1 = biproduct({a.m1.carrier, b.m1.carrier});
  auto sum_act = [&](const DirectSum& s, const ChainMap& x, const ChainMap& y, const ChainComplex& z) {
    return s.inclusions[0] * x * t(s.projections[0], id(z)) + s.inclusions[1] * y * t(s.projections[1], id(z));
  };
  ChainMap phi = s0.inclusions[0] * a.phi * t(s1.projections[0], id(I)) +
                 s0.inclusions[1] * b.phi * t(s1.projections[1], id(I));
  return {a.over,
          {s0.object, sum_act(s0, a.m0.act, b.m0.act, R)},
          {s1.object, sum_act(s1, a.m1.act, b.m1.act, R)},
          direct_sum_map(s0, s1, {a.f, b.f}),
          phi};
}

RightModule free_right_module(const ChainComplex& v, const DGAlgebra& r) {
  const ChainComplex& R = r.carrier;
  return {tensor_complex(v, R), t(id(v), r.mult) * associator(v, R, R)};
}

LeftModule free_left_module(const ChainComplex& v, const DGAlgebra& r) {
  const ChainComplex& R = r.carrier;
  return {tensor_complex(R, v), t(r.mult, id(v)) * inverse_iso(associator(R, R, v))};
}

RightModule augmented_module(const ChainComplex& m, const DGAlgebra& r, const ChainMap& eps) {
  (void)r;
  return {m, right_unitor(m) * t(id(m), eps)};
}

// ---------------------------------------------------------------------------
// Generators

DGAlgebra random_square_zero(Rng& rng, const GenConfig& cfg) { return square_zero_extension(random_complex(rng, cfg)); }

ChainMap augmentation(const DGAlgebra& r) {
  const ChainComplex& R = r.carrier;
  if (R.dim(0) == 0) throw Error("augmentation: algebra is zero in degree 0");
  Matrix e(R.field(), 1, R.dim(0));
  e(0, 0) = 1;
  return ChainMap(R, ChainComplex::unit(R.field()), {{0, e}});
}

SmithIdeal random_smith_ideal(Rng& rng, const GenConfig& cfg, bool injective) {
  ChainComplex n = random_complex(rng, cfg);
  ChainMap j = injective ? random_injection(rng, n, cfg) : random_map(rng, n, random_complex(rng, cfg));
  return square_zero_ideal(j);
}

MonoidHom random_surjective_hom(Rng& rng, const GenConfig& cfg) {
  const Field& f = cfg.field;
  ChainComplex target = rng.coin(0.25) ? ChainComplex::zero(f) : random_complex(rng, cfg);
  ChainMap q = random_surjection(rng, target, cfg);
  DGAlgebra r = square_zero_extension(q.src()), s = square_zero_extension(q.dst());
  ChainMap map = direct_sum_map(sz_sum(q.src()), sz_sum(q.dst()), {id(ChainComplex::unit(f)), q});
  return {r, s, retype(map, r.carrier, s.carrier)};
}

SmithIdealMap random_ideal_map(Rng& rng, const GenConfig& cfg) {
  const Field& f = cfg.field;
  ChainMap j = random_map(rng, random_complex(rng, cfg), random_complex(rng, cfg));
  ChainMap j2 = random_map(rng, random_complex(rng, cfg), random_complex(rng, cfg));
  ArrowSquare sq = random_square(rng, j, j2);
  SmithIdeal s = square_zero_ideal(j), u = square_zero_ideal(j2);
  ChainMap a1 = direct_sum_map(sz_sum(j.dst()), sz_sum(j2.dst()), {id(ChainComplex::unit(f)), sq.a1});
  return {s, u, sq.a0, retype(a1, s.alg.carrier, u.alg.carrier)};
}

SmithModule random_smith_module(Rng& rng, const SmithIdeal& s, const GenConfig& cfg) {
  const ChainComplex &R = s.alg.carrier, &I = s.ideal.carrier;
  ChainMap eps = augmentation(s.alg);
  ChainComplex m0 = random_complex(rng, cfg), m1 = random_complex(rng, cfg);
  ChainMap f = random_map(rng, m0, m1);
  Kernel k = kernel(f);
  Cokernel c = cokernel(f);
  ChainMap psi = random_map(rng, tensor_complex(c.object, I), k.object);
  ChainMap phi = k.inclusion * psi * t(c.projection, id(I));
  SmithModule aug{s, augmented_module(m0, s.alg, eps), augmented_module(m1, s.alg, eps), f, phi};
  (void)R;
  GenConfig small = cfg;
  small.max_dim = std::max<std::size_t>(1, cfg.max_dim / 2);
  small.max_total = std::max<std::size_t>(1, cfg.max_total / 2);
  ChainComplex v = random_complex(rng, small);
  return direct_sum(aug, tensor_module(v, unit_module(s)));
}

TensorMonoidModule random_tensor_module(Rng& rng, const MonoidHom& p, const GenConfig& cfg) {
  RightModule n1 = free_right_module(random_complex(rng, cfg), p.dst);
  ChainComplex w = random_complex(rng, cfg);
  RightModule n0 = free_right_module(w, p.src);
  ChainMap h = random_map(rng, w, n1.carrier);
  ChainMap g = n1.act * t(h, p.map);
  return {p, n0, n1, retype(g, n0.carrier, n1.carrier)};
}

}  // namespace smith
