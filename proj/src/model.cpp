#include "smith/model.hpp"

namespace smith {

namespace {

ChainMap id(const ChainComplex& x) { return ChainMap::identity(x); }

using Terms = std::vector<LinearSystem::Term>;

// sum of terms = rhs in degree n, skipped when the equation is empty
void equation(LinearSystem& sys, const Terms& terms, const Matrix& rhs) {
  if (rhs.rows() == 0 || rhs.cols() == 0) return;
  if (terms.empty()) {
    if (!rhs.is_zero()) sys.add_equation({}, rhs);
    return;
  }
  sys.add_equation(terms, rhs);
}

Matrix zeros(const Field& f, std::size_t r, std::size_t c) { return Matrix(f, r, c); }

// unknown square g -> h given by two map unknowns
struct SquareUnknowns {
  MapUnknown u0, u1;
  SquareUnknowns(LinearSystem& sys, const ArrowObject& g, const ArrowObject& h)
      : u0(sys, g.src(), h.src()), u1(sys, g.dst(), h.dst()) {}
  void add_conditions(LinearSystem& sys, const ArrowObject& g, const ArrowObject& h) const {
    u0.add_chain_conditions(sys);
    u1.add_chain_conditions(sys);
    const Field& f = g.field();
    for (int n = g.src().lo(); n <= g.src().hi(); ++n) {
      Terms t;
      add_terms(t, u0, n, h.comp(n), Matrix());
      add_terms(t, u1, n, Matrix(), -g.comp(n));
      equation(sys, t, zeros(f, h.dst().dim(n), g.src().dim(n)));
    }
  }
  ArrowSquare read(const std::vector<Matrix>& sol, const ArrowObject& g, const ArrowObject& h) const {
    return {g, h, u0.read(sol), u1.read(sol)};
  }
};

// X . left = target in every degree of X's source
void precompose_eq(LinearSystem& sys, const MapUnknown& x, const ChainMap& left, const ChainMap& target) {
  const ChainComplex& a = left.src();
  for (int n = a.lo(); n <= a.hi(); ++n) {
    Terms t;
    add_terms(t, x, n, Matrix(), left.comp(n));
    equation(sys, t, target.comp(n));
  }
}

// right . X = target
void postcompose_eq(LinearSystem& sys, const MapUnknown& x, const ChainMap& right, const ChainMap& target) {
  const ChainComplex& b = x.src();
  for (int n = b.lo(); n <= b.hi(); ++n) {
    Terms t;
    add_terms(t, x, n, right.comp(n), Matrix());
    equation(sys, t, target.comp(n));
  }
}

// right . X - Y . left = 0
void commute_eq(LinearSystem& sys, const MapUnknown& x, const ChainMap& right, const MapUnknown& y,
                const ChainMap& left) {
  const ChainComplex& a = left.src();
  const Field& f = a.field();
  for (int n = a.lo(); n <= a.hi(); ++n) {
    Terms t;
    add_terms(t, x, n, right.comp(n), Matrix());
    add_terms(t, y, n, Matrix(), -left.comp(n));
    equation(sys, t, zeros(f, right.dst().dim(n), a.dim(n)));
  }
}

std::vector<Matrix> random_solution(Rng& rng, const LinearSystem& sys) {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < sys.unknown_count(); ++k) {
    auto [r, c] = sys.unknown_shape(k);
    out.emplace_back(sys.field(), r, c);
  }
  for (auto& basis : sys.nullspace()) {
    std::uint32_t c = rng.element(sys.field());
    if (!c) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] + basis[k].scaled(c);
  }
  return out;
}

}  // namespace

const char* to_string(MapClass c) {
  switch (c) {
    case MapClass::Cofibration: return "cofibration";
    case MapClass::TrivialCofibration: return "trivial cofibration";
    case MapClass::Fibration: return "fibration";
    case MapClass::TrivialFibration: return "trivial fibration";
    case MapClass::WeakEquivalence: return "weak equivalence";
  }
  return "?";
}

const char* to_string(ArrowModel m) { return m == ArrowModel::Injective ? "injective" : "projective"; }

bool classify_base(const ChainMap& f, MapClass c) {
  switch (c) {
    case MapClass::Cofibration: return is_degreewise_injective(f);
    case MapClass::TrivialCofibration: return is_degreewise_injective(f) && is_quasi_iso(f);
    case MapClass::Fibration: return is_degreewise_surjective(f);
    case MapClass::TrivialFibration: return is_degreewise_surjective(f) && is_quasi_iso(f);
    case MapClass::WeakEquivalence: return is_quasi_iso(f);
  }
  return false;
}

ChainMap injective_fibration_corner(const ArrowSquare& a) {
  Pullback pb = pullback(a.a1, a.dst);
  return pb.mediate(a.src, a.a0);
}

ChainMap projective_cofibration_corner(const ArrowSquare& a) {
  Pushout po = pushout(a.src, a.a0);
  return po.mediate(a.a1, a.dst);
}

bool injective_cofibration(const ArrowSquare& a, bool trivial) {
  MapClass c = trivial ? MapClass::TrivialCofibration : MapClass::Cofibration;
  return classify_base(a.a0, c) && classify_base(a.a1, c);
}

bool injective_fibration(const ArrowSquare& a, bool trivial) {
  MapClass c = trivial ? MapClass::TrivialFibration : MapClass::Fibration;
  return classify_base(a.a1, c) && classify_base(injective_fibration_corner(a), c);
}

bool injective_weq(const ArrowSquare& a) { return is_quasi_iso(a.a0) && is_quasi_iso(a.a1); }

bool projective_cofibration(const ArrowSquare& a, bool trivial) {
  MapClass c = trivial ? MapClass::TrivialCofibration : MapClass::Cofibration;
  return classify_base(a.a0, c) && classify_base(projective_cofibration_corner(a), c);
}

bool projective_fibration(const ArrowSquare& a, bool trivial) {
  MapClass c = trivial ? MapClass::TrivialFibration : MapClass::Fibration;
  return classify_base(a.a0, c) && classify_base(a.a1, c);
}

bool projective_weq(const ArrowSquare& a) { return injective_weq(a); }

bool classify_arrow(ArrowModel m, const ArrowSquare& a, MapClass c) {
  const bool inj = m == ArrowModel::Injective;
  switch (c) {
    case MapClass::Cofibration: return inj ? injective_cofibration(a) : projective_cofibration(a);
    case MapClass::TrivialCofibration: return inj ? injective_cofibration(a, true) : projective_cofibration(a, true);
    case MapClass::Fibration: return inj ? injective_fibration(a) : projective_fibration(a);
    case MapClass::TrivialFibration: return inj ? injective_fibration(a, true) : projective_fibration(a, true);
    case MapClass::WeakEquivalence: return injective_weq(a);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Lifting

std::optional<ChainMap> solve_lifting(const LiftingProblem& prob) {
  if (!same_graded_data(prob.right * prob.top, prob.bottom * prob.left))
    throw Error("lifting problem: outer square does not commute");
  LinearSystem sys(prob.left.field());
  MapUnknown h(sys, prob.left.dst(), prob.right.src());
  h.add_chain_conditions(sys);
  precompose_eq(sys, h, prob.left, prob.top);
  postcompose_eq(sys, h, prob.right, prob.bottom);
  auto sol = solve_linear_constraints(sys);
  if (!sol) return std::nullopt;
  return h.read(*sol);
}

std::optional<ArrowSquare> solve_lifting(const ArrowLiftingProblem& prob) {
  if (!same_graded_data(compose(prob.right, prob.top), compose(prob.bottom, prob.left)))
    throw Error("lifting problem: outer square does not commute");
  const ArrowObject &g = prob.left.dst, &h = prob.right.src;
  LinearSystem sys(g.field());
  SquareUnknowns x(sys, g, h);
  x.add_conditions(sys, g, h);
  precompose_eq(sys, x.u0, prob.left.a0, prob.top.a0);
  precompose_eq(sys, x.u1, prob.left.a1, prob.top.a1);
  postcompose_eq(sys, x.u0, prob.right.a0, prob.bottom.a0);
  postcompose_eq(sys, x.u1, prob.right.a1, prob.bottom.a1);
  auto sol = solve_linear_constraints(sys);
  if (!sol) return std::nullopt;
  return x.read(*sol, g, h);
}

LiftingProblem random_lifting_problem(Rng& rng, const ChainMap& left, const ChainMap& right) {
  LinearSystem sys(left.field());
  MapUnknown top(sys, left.src(), right.src()), bottom(sys, left.dst(), right.dst());
  top.add_chain_conditions(sys);
  bottom.add_chain_conditions(sys);
  commute_eq(sys, top, right, bottom, left);
  auto sol = random_solution(rng, sys);
  return {left, right, top.read(sol), bottom.read(sol)};
}

ArrowLiftingProblem random_lifting_problem(Rng& rng, const ArrowSquare& left, const ArrowSquare& right) {
  LinearSystem sys(left.src.field());
  SquareUnknowns top(sys, left.src, right.src), bottom(sys, left.dst, right.dst);
  top.add_conditions(sys, left.src, right.src);
  bottom.add_conditions(sys, left.dst, right.dst);
  commute_eq(sys, top.u0, right.a0, bottom.u0, left.a0);
  commute_eq(sys, top.u1, right.a1, bottom.u1, left.a1);
  auto sol = random_solution(rng, sys);
  return {left, right, top.read(sol, left.src, right.src), bottom.read(sol, left.dst, right.dst)};
}

// ---------------------------------------------------------------------------
// Factorizations and replacements

Factorization factor_map(const ChainMap& f, FactorMode mode) {
  if (mode == FactorMode::CofTrivFib) {
    Cylinder c = cylinder(f);
    return {c.inclusion, c.projection};
  }
  PathSpace n = path_space(f);
  return {n.inclusion, n.projection};
}

SquareFactorization factor_square(const ArrowSquare& a, FactorMode mode, ArrowModel model) {
  const ArrowObject &f = a.src, &g = a.dst;
  if (model == ArrowModel::Projective) {
    Factorization f0 = factor_map(a.a0, mode);
    Pushout po = pushout(f, f0.first);
    Factorization f1 = factor_map(po.mediate(a.a1, g * f0.second), mode);
    ArrowObject m = f1.first * po.from_c;
    return {{f, m, f0.first, f1.first * po.from_b}, {m, g, f0.second, f1.second}};
  }
  Factorization f1 = factor_map(a.a1, mode);
  Pullback pb = pullback(f1.second, g);
  Factorization f0 = factor_map(pb.mediate(f1.first * f, a.a0), mode);
  ArrowObject m = pb.to_b * f0.second;
  return {{f, m, f0.first, f1.first}, {m, g, pb.to_c * f0.second, f1.second}};
}

Replacement arrow_cofibrant_replacement(const ArrowObject& f) {
  if (is_degreewise_injective(f)) return {f, identity_square(f)};
  Cylinder c = cylinder(f);
  return {c.inclusion, {c.inclusion, f, id(f.src()), c.projection}};
}

Replacement arrow_fibrant_replacement(const ArrowObject& p) {
  if (is_degreewise_surjective(p)) return {p, identity_square(p)};
  PathSpace n = path_space(p);
  return {n.projection, {p, n.projection, n.inclusion, id(p.dst())}};
}

StableAdjunct stable_adjunct_check(const ArrowObject& f, const ArrowObject& p, const ArrowSquare& alpha) {
  if (!is_degreewise_injective(f)) throw Error("stable adjunct: f is not cofibrant");
  if (!is_degreewise_surjective(p)) throw Error("stable adjunct: p is not fibrant");
  if (!same_arrow(alpha.src, coker_arrow(f)) || !same_arrow(alpha.dst, p))
    throw ShapeError("stable adjunct: alpha must run from coker f to p");
  if (auto v = validate_square(alpha); !v) throw Error("stable adjunct: " + v.failure);
  ArrowSquare beta = transpose_to_ker(alpha, f, p);
  return {injective_weq(alpha), injective_weq(beta), beta};
}

ArrowSquare replaced_unit(const ArrowObject& f) {
  Replacement c = arrow_cofibrant_replacement(f);
  Replacement t = arrow_fibrant_replacement(coker_arrow(c.arrow));
  return transpose_to_ker(t.square, c.arrow, t.arrow);
}

// ---------------------------------------------------------------------------
// Flatness and pure classes

bool flatness_check(const DGAlgebra& r, const RightModule& m, const LeftModule& a, const LeftModule& b,
                    const ChainMap& f) {
  RelativeTensor ta = relative_tensor(m, a, r.carrier), tb = relative_tensor(m, b, r.carrier);
  ChainMap induced = must_factor({ta.quotient}, {tb.quotient * tensor_map(id(m.carrier), f)}, "flatness");
  return is_quasi_iso(induced);
}

RightModule random_cell_module(Rng& rng, const DGAlgebra& r, const GenConfig& cfg, int cells) {
  const Field& f = cfg.field;
  const ChainComplex& R = r.carrier;
  ChainComplex z = ChainComplex::zero(f);
  RightModule m{z, ChainMap::zero(tensor_complex(z, R), z)};
  for (int k = 0; k < cells; ++k) {
    const int n = static_cast<int>(rng.uniform(cfg.lo + 1, cfg.hi));
    ChainComplex s = ChainComplex::sphere(f, n - 1);
    ChainMap x = random_map(rng, s, m.carrier);
    ChainMap g = m.act * tensor_map(x, id(R));
    m = cone_module(g, free_right_module(s, r), m, R);
  }
  return m;
}

bool pushout_stability_check(const ChainMap& i, const ChainMap& g) {
  if (!is_degreewise_injective(i)) throw Error("pushout stability: the map is not a degreewise injection");
  if (!same_graded_data(i.src(), g.src())) throw ShapeError("pushout stability: maps have different sources");
  return is_degreewise_injective(pushout(i, g).from_c);
}

bool gluing_check(const GluingDiagram& d) {
  if (!is_degreewise_injective(d.i) || !is_degreewise_injective(d.i2))
    throw Error("gluing: horizontal maps must be injections");
  if (!same_graded_data(d.b * d.i, d.i2 * d.a) || !same_graded_data(d.c * d.g, d.g2 * d.a))
    throw Error("gluing: diagram does not commute");
  if (!is_quasi_iso(d.a) || !is_quasi_iso(d.b) || !is_quasi_iso(d.c))
    throw Error("gluing: vertical maps must be quasi-isomorphisms");
  Pushout p = pushout(d.i, d.g), p2 = pushout(d.i2, d.g2);
  return is_quasi_iso(p.mediate(p2.from_b * d.b, p2.from_c * d.c));
}

GluingDiagram random_gluing_diagram(Rng& rng, const GenConfig& cfg) {
  ChainComplex a = random_complex(rng, cfg);
  ChainMap i = random_injection(rng, a, cfg);
  ChainMap g = random_map(rng, a, random_complex(rng, cfg));
  ChainMap av = random_quasi_iso(rng, a, cfg);
  Pushout pb = pushout(i, av), pc = pushout(g, av);
  ChainMap eb = random_quasi_iso(rng, pb.object, cfg), ec = random_quasi_iso(rng, pc.object, cfg);
  return {i, g, eb * pb.from_c, ec * pc.from_c, av, eb * pb.from_b, ec * pc.from_b};
}

bool sequential_check(const SequentialDiagram& d) {
  const std::size_t k = d.vertical.size();
  if (k == 0 || d.top.size() + 1 != k || d.bottom.size() + 1 != k)
    throw Error("sequential: chain lengths do not match");
  for (std::size_t s = 0; s + 1 < k; ++s) {
    if (!is_degreewise_injective(d.top[s]) || !is_degreewise_injective(d.bottom[s]))
      throw Error("sequential: horizontal maps must be injections");
    if (!same_graded_data(d.vertical[s + 1] * d.top[s], d.bottom[s] * d.vertical[s]))
      throw Error("sequential: diagram does not commute");
  }
  for (auto& v : d.vertical)
    if (!is_quasi_iso(v)) throw Error("sequential: vertical maps must be quasi-isomorphisms");
  // a finite chain has its last term as colimit
  return is_quasi_iso(d.vertical.back());
}

SequentialDiagram random_sequential_diagram(Rng& rng, const GenConfig& cfg, int length) {
  SequentialDiagram d;
  ChainComplex a = random_complex(rng, cfg);
  d.vertical.push_back(random_quasi_iso(rng, a, cfg));
  for (int s = 1; s < length; ++s) {
    ChainMap t = random_injection(rng, d.vertical.back().src(), cfg);
    Pushout p = pushout(t, d.vertical.back());
    ChainMap e = random_quasi_iso(rng, p.object, cfg);
    d.top.push_back(t);
    d.bottom.push_back(e * p.from_c);
    d.vertical.push_back(e * p.from_b);
  }
  return d;
}

}  // namespace smith
