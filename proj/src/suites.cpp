#include "smith/suites.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>

#include "smith/kerco.hpp"

namespace smith {

namespace {

ChainMap id(const ChainComplex& x) { return ChainMap::identity(x); }

struct Ctx {
  GenConfig cfg;
  GenConfig small;  // for the occasional four-fold products
  int trial = 0;
  Json witness = Json::object();
};

#define EXPECT(cond)                                      \
  do {                                                    \
    if (!(cond)) return std::string("expected " #cond);   \
  } while (0)

#define EXPECT_OK(verdict)                                         \
  do {                                                             \
    Verdict v_ = (verdict);                                        \
    if (!v_.ok()) return std::string(#verdict ": ") + v_.failure;  \
  } while (0)

using TrialFn = std::function<std::string(Rng&, Ctx&)>;

struct Caps {
  std::size_t max_dim;
  int span;
  std::size_t total;
};

struct Suite {
  const char* name;
  Caps caps;
  TrialFn run;
};

bool good_iso(const ArrowSquare& a) { return validate_square(a).ok() && is_iso(a); }

// ---------------------------------------------------------------------------

std::string monoidal_laws(Rng& rng, Ctx& ctx) {
  ArrowObject f = random_arrow(rng, ctx.cfg), g = random_arrow(rng, ctx.cfg), h = random_arrow(rng, ctx.cfg);
  ctx.witness = {{"f", arrow_to_json(f)}, {"g", arrow_to_json(g)}, {"h", arrow_to_json(h)}};
  for (const ArrowSquare& u :
       {tensor_left_unitor(f), tensor_right_unitor(f), box_left_unitor(f), box_right_unitor(f)})
    EXPECT(good_iso(u));

  ArrowSquare t = tensor_symmetry(f, g), b = box_symmetry(f, g);
  EXPECT(good_iso(t) && good_iso(b));
  EXPECT(same_graded_data(compose(tensor_symmetry(g, f), t), identity_square(t.src)));
  EXPECT(same_graded_data(compose(box_symmetry(g, f), b), identity_square(b.src)));

  EXPECT(good_iso(tensor_associator(f, g, h)));
  BoxAssociativity w = box_associativity(f, g, h);
  EXPECT(good_iso(w.left_to_cube));
  EXPECT(good_iso(w.right_to_cube));
  EXPECT(good_iso(w.associator));

  ArrowSquare idf = identity_square(f), idg = identity_square(g);
  ChainComplex s = ChainComplex::unit(f.field());
  EXPECT(same_graded_data(pushout_product_square(box_right_unitor(f), idg),
                          compose(pushout_product_square(idf, box_left_unitor(g)), box_associator(f, L1(s), g))));
  EXPECT(same_graded_data(tensor_square(tensor_right_unitor(f), idg),
                          compose(tensor_square(idf, tensor_left_unitor(g)), tensor_associator(f, L0(s), g))));

  if (ctx.trial % 10 == 0) {
    ArrowObject a = random_arrow(rng, ctx.small), c = random_arrow(rng, ctx.small), d = random_arrow(rng, ctx.small),
                e = random_arrow(rng, ctx.small);
    ctx.witness["pentagon"] = {arrow_to_json(a), arrow_to_json(c), arrow_to_json(d), arrow_to_json(e)};
    auto pp = [](const ArrowObject& x, const ArrowObject& y) { return pushout_product(x, y).arrow; };
    ArrowSquare lhs = compose(box_associator(a, c, pp(d, e)), box_associator(pp(a, c), d, e));
    ArrowSquare rhs =
        compose(pushout_product_square(identity_square(a), box_associator(c, d, e)),
                compose(box_associator(a, pp(c, d), e),
                        pushout_product_square(box_associator(a, c, d), identity_square(e))));
    EXPECT(same_graded_data(lhs, rhs));
    ArrowSquare tl = compose(tensor_associator(a, c, tensor_arrow(d, e)), tensor_associator(tensor_arrow(a, c), d, e));
    ArrowSquare tr = compose(tensor_square(identity_square(a), tensor_associator(c, d, e)),
                             compose(tensor_associator(a, tensor_arrow(c, d), e),
                                     tensor_square(tensor_associator(a, c, d), identity_square(e))));
    EXPECT(same_graded_data(tl, tr));
  }
  return {};
}

std::string eval_adjoints(Rng& rng, Ctx& ctx) {
  ChainComplex x = random_complex(rng, ctx.cfg), y = random_complex(rng, ctx.cfg);
  ArrowObject f = random_arrow(rng, ctx.cfg);
  ctx.witness = {{"x", to_json(x)}, {"y", to_json(y)}, {"f", arrow_to_json(f)}};
  for (EvalAdjunction which :
       {EvalAdjunction::L0Ev0, EvalAdjunction::L1Ev1, EvalAdjunction::Ev0U0, EvalAdjunction::Ev1U1})
    EXPECT(adjunction_check(which, x, f));

  EXPECT(same_arrow(tensor_arrow(L1(x), f), L1(tensor_complex(x, f.dst()))));
  EXPECT(same_arrow(pushout_product(L0(x), f).arrow, L0(tensor_complex(x, f.dst()))));
  EXPECT(same_arrow(tensor_arrow(L0(x), L0(y)), L0(tensor_complex(x, y))));
  EXPECT(same_arrow(pushout_product(L1(x), L1(y)).arrow, L1(tensor_complex(x, y))));
  ChainComplex s = ChainComplex::unit(f.field());
  EXPECT(same_arrow(pushout_product(L1(s), f).arrow, f));
  EXPECT(same_arrow(tensor_arrow(L0(s), f), f));
  return {};
}

std::string coker_monoidal(Rng& rng, Ctx& ctx) {
  ArrowObject f = random_arrow(rng, ctx.cfg), g = random_arrow(rng, ctx.cfg);
  ctx.witness = {{"f", arrow_to_json(f)}, {"g", arrow_to_json(g)}};
  ArrowSquare c = monoidal_comparison_iso(f, g);
  EXPECT(good_iso(c));
  EXPECT(same_graded_data(compose(monoidal_comparison_inverse(f, g), c), identity_square(c.src)));

  ArrowObject f2 = random_arrow(rng, ctx.cfg), g2 = random_arrow(rng, ctx.cfg);
  ctx.witness["f2"] = arrow_to_json(f2);
  ctx.witness["g2"] = arrow_to_json(g2);
  EXPECT(comparison_naturality_check(random_square(rng, f, f2), random_square(rng, g, g2)));

  ChainComplex s = ChainComplex::unit(f.field());
  EXPECT(same_arrow(coker_arrow(L1(s)), L0(s)));
  ArrowSquare u = monoidal_comparison_iso(L1(s), L1(s));
  EXPECT(same_graded_data(u.a0, id(u.a0.src())) && same_graded_data(u.a1, id(u.a1.src())));
  return {};
}

SmithIdeal ideal_with_nonzero_i(Rng& rng, const GenConfig& cfg) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    SmithIdeal s = random_smith_ideal(rng, cfg, true);
    if (!s.ideal.carrier.is_zero()) return s;
  }
  return polynomial_ideal(cfg.field, 2, 1);
}

std::string smith_unwind(Rng& rng, Ctx& ctx) {
  const Field& f = ctx.cfg.field;
  SmithIdeal s = unit_smith_ideal(f);
  if (ctx.trial % 3 == 0) {
    int k = static_cast<int>(rng.uniform(2, 4));
    s = polynomial_ideal(f, k, static_cast<int>(rng.uniform(1, k - 1)), static_cast<int>(rng.uniform(-1, 1)));
  } else {
    s = random_smith_ideal(rng, ctx.cfg, ctx.trial % 2 == 0);
  }
  ctx.witness = {{"ideal", to_json(s)}};
  EXPECT_OK(validate_smith_ideal(s));
  SquareMonoid m = smith_to_square_monoid(s);
  EXPECT_OK(validate_square_monoid(m));
  EXPECT(same_data(smith_from_square_monoid(m), s));
  EXPECT(same_data(smith_to_square_monoid(smith_from_square_monoid(m)), m));

  SmithModule mod = ctx.trial % 3 == 0 ? tensor_module(random_complex(rng, ctx.cfg), unit_module(s))
                                       : random_smith_module(rng, s, ctx.cfg);
  ctx.witness["module"] = to_json(mod);
  EXPECT_OK(validate_smith_module(mod));
  SquareModule a = module_to_square_action(mod);
  EXPECT_OK(validate_square_module(a, m));
  EXPECT(same_data(module_from_square_action(s, a), mod));

  if (ctx.trial < 20) {
    NegativeInstance neg = engineered_negative_instance(rng, ctx.cfg, ctx.trial % 10);
    ctx.witness["negative"] = neg.name;
    if (neg.ideal) {
      ctx.witness["ideal"] = to_json(*neg.ideal);
      EXPECT(!validate_smith_ideal(*neg.ideal).ok());
    }
    if (neg.module) {
      ctx.witness["module"] = to_json(*neg.module);
      EXPECT(!validate_smith_module(*neg.module).ok());
    }
  }
  return {};
}

std::string scalars(Rng& rng, Ctx& ctx) {
  SmithIdealMap a = random_ideal_map(rng, ctx.cfg);
  ctx.witness = {{"src", to_json(a.src)}, {"dst", to_json(a.dst)}, {"a0", to_json(a.a0)}, {"a1", to_json(a.a1)}};
  EXPECT_OK(validate_smith_ideal_map(a));
  SmithModule m = random_smith_module(rng, a.src, ctx.cfg);
  SmithModule n = random_smith_module(rng, a.dst, ctx.cfg);
  ctx.witness["m"] = to_json(m);
  ctx.witness["n"] = to_json(n);
  SmithModule e = extend_scalars(a, m);
  EXPECT_OK(validate_smith_module(e));
  EXPECT(good_iso(extension_comparison(a, m)));
  SmithModule r = restrict_scalars(a, n);
  EXPECT_OK(validate_smith_module(r));
  EXPECT(module_hom_dim(e, n) == module_hom_dim(m, r));
  return {};
}

std::string quotient_kernel(Rng& rng, Ctx& ctx) {
  MonoidHom h = random_surjective_hom(rng, ctx.cfg);
  ctx.witness = {{"hom", {{"src", to_json(h.src)}, {"dst", to_json(h.dst)}, {"map", to_json(h.map)}}}};
  EXPECT_OK(validate_monoid_hom(h));
  SmithIdeal k = kernel_smith_ideal(h);
  EXPECT_OK(validate_smith_ideal(k));
  MonoidHom q = quotient_dga(k);
  EXPECT_OK(validate_monoid_hom(q));
  // the comparison R/K -> T is forced by the projections
  ChainMap c = must_factor({q.map}, {h.map}, "quotient comparison");
  EXPECT(is_isomorphism(c));
  EXPECT(same_graded_data(c * q.dst.mult, h.dst.mult * tensor_map(c, c)));
  EXPECT(same_graded_data(c * q.dst.unit, h.dst.unit));

  SmithIdeal s = random_smith_ideal(rng, ctx.cfg, true);
  ctx.witness["ideal"] = to_json(s);
  SmithIdeal k2 = kernel_smith_ideal(quotient_dga(s));
  EXPECT_OK(validate_smith_ideal(k2));
  ChainMap u = must_lift({k2.j}, {s.j}, "ideal comparison");
  EXPECT(is_isomorphism(u));
  EXPECT(same_graded_data(u * s.ideal.left, k2.ideal.left * tensor_map(id(s.alg.carrier), u)));
  EXPECT(same_graded_data(u * s.ideal.right, k2.ideal.right * tensor_map(u, id(s.alg.carrier))));
  return {};
}

bool positive_pair(const ArrowSquare& l, const ArrowSquare& r, ArrowModel m) {
  return (classify_arrow(m, l, MapClass::Cofibration) && classify_arrow(m, r, MapClass::TrivialFibration)) ||
         (classify_arrow(m, l, MapClass::TrivialCofibration) && classify_arrow(m, r, MapClass::Fibration));
}

bool positive_pair(const ChainMap& l, const ChainMap& r) {
  return (classify_base(l, MapClass::Cofibration) && classify_base(r, MapClass::TrivialFibration)) ||
         (classify_base(l, MapClass::TrivialCofibration) && classify_base(r, MapClass::Fibration));
}

ArrowSquare any_square(Rng& rng, const GenConfig& cfg) {
  return random_square(rng, random_arrow(rng, cfg), random_arrow(rng, cfg));
}

std::string model_predicates(Rng& rng, Ctx& ctx) {
  ArrowObject x = random_arrow(rng, ctx.cfg), y = random_arrow(rng, ctx.cfg);
  ctx.witness = {{"x", arrow_to_json(x)}, {"y", arrow_to_json(y)}};
  Factorization fx = factor_map(x, FactorMode::CofTrivFib), fy = factor_map(y, FactorMode::CofTrivFib);
  EXPECT(classify_base(fx.first, MapClass::Cofibration));
  EXPECT(classify_base(fy.second, MapClass::TrivialFibration));
  auto lift = solve_lifting(random_lifting_problem(rng, fx.first, fy.second));
  EXPECT(lift.has_value());
  Factorization gx = factor_map(x, FactorMode::TrivCofFib), gy = factor_map(y, FactorMode::TrivCofFib);
  EXPECT(classify_base(gx.first, MapClass::TrivialCofibration));
  EXPECT(classify_base(gy.second, MapClass::Fibration));
  EXPECT(solve_lifting(random_lifting_problem(rng, gx.first, gy.second)).has_value());

  for (ArrowModel model : {ArrowModel::Injective, ArrowModel::Projective}) {
    for (FactorMode mode : {FactorMode::CofTrivFib, FactorMode::TrivCofFib}) {
      ArrowSquare a = any_square(rng, ctx.cfg), b = any_square(rng, ctx.cfg);
      ctx.witness["a"] = to_json(a);
      ctx.witness["b"] = to_json(b);
      ArrowSquare l = factor_square(a, mode, model).first, r = factor_square(b, mode, model).second;
      bool cof = mode == FactorMode::CofTrivFib;
      EXPECT(classify_arrow(model, l, cof ? MapClass::Cofibration : MapClass::TrivialCofibration));
      EXPECT(classify_arrow(model, r, cof ? MapClass::TrivialFibration : MapClass::Fibration));
      ArrowLiftingProblem prob = random_lifting_problem(rng, l, r);
      auto h = solve_lifting(prob);
      EXPECT(h.has_value());
      EXPECT(validate_square(*h).ok());
      EXPECT(same_graded_data(compose(*h, l), prob.top) && same_graded_data(compose(r, *h), prob.bottom));
    }
    // a random pair that happens to be positive must lift
    ArrowSquare l = any_square(rng, ctx.cfg), r = any_square(rng, ctx.cfg);
    if (positive_pair(l, r, model)) EXPECT(solve_lifting(random_lifting_problem(rng, l, r)).has_value());
  }

  if (ctx.trial < 20) {
    NegativeLift n = engineered_negative_lift(ctx.cfg.field, ctx.trial % 5, (ctx.trial / 5) % 4 - 2);
    ctx.witness["negative"] = n.name;
    if (n.base) {
      EXPECT(!solve_lifting(*n.base).has_value());
      EXPECT(!positive_pair(n.base->left, n.base->right));
    }
    if (n.arrow) {
      EXPECT(!solve_lifting(*n.arrow).has_value());
      EXPECT(!positive_pair(n.arrow->left, n.arrow->right, ArrowModel::Injective));
      EXPECT(!positive_pair(n.arrow->left, n.arrow->right, ArrowModel::Projective));
    }
  }
  return {};
}

std::string left_quillen_coker(Rng& rng, Ctx& ctx) {
  ArrowSquare a = any_square(rng, ctx.cfg), b = any_square(rng, ctx.cfg);
  ctx.witness = {{"a", to_json(a)}, {"b", to_json(b)}};
  ArrowSquare cof = factor_square(a, FactorMode::CofTrivFib, ArrowModel::Projective).first;
  ArrowSquare tcof = factor_square(b, FactorMode::TrivCofFib, ArrowModel::Projective).first;
  EXPECT(projective_cofibration(cof) && projective_cofibration(tcof, true));
  EXPECT(injective_cofibration(coker_square(cof)));
  EXPECT(injective_cofibration(coker_square(tcof), true));
  EXPECT(injective_cofibration(cof) && injective_cofibration(tcof, true));

  ArrowSquare fib = factor_square(a, FactorMode::TrivCofFib, ArrowModel::Injective).second;
  ArrowSquare tfib = factor_square(b, FactorMode::CofTrivFib, ArrowModel::Injective).second;
  EXPECT(injective_fibration(fib) && injective_fibration(tfib, true));
  EXPECT(projective_fibration(ker_square(fib)));
  EXPECT(projective_fibration(ker_square(tfib), true));
  return {};
}

std::string stable_adjunct(Rng& rng, Ctx& ctx) {
  ArrowObject f0 = random_arrow(rng, ctx.cfg), p0 = random_arrow(rng, ctx.cfg);
  ctx.witness = {{"f", arrow_to_json(f0)}, {"p", arrow_to_json(p0)}};
  ArrowObject f = arrow_cofibrant_replacement(f0).arrow;
  ArrowObject p;
  ArrowSquare alpha;
  switch (ctx.trial % 3) {
    case 0:
      p = arrow_fibrant_replacement(p0).arrow;
      alpha = random_square(rng, coker_arrow(f), p);
      break;
    case 1: {
      Replacement r = arrow_fibrant_replacement(coker_arrow(f));
      p = r.arrow;
      alpha = r.square;
      break;
    }
    default:
      p = arrow_fibrant_replacement(p0).arrow;
      alpha = zero_square(coker_arrow(f), p);
  }
  ctx.witness["alpha"] = to_json(alpha);
  StableAdjunct sa = stable_adjunct_check(f, p, alpha);
  EXPECT(sa.alpha_weq == sa.beta_weq);
  if (ctx.trial % 3 == 1) EXPECT(sa.alpha_weq);
  EXPECT(injective_weq(replaced_unit(f0)));
  return {};
}

std::string purity_flatness(Rng& rng, Ctx& ctx) {
  ChainComplex x = random_complex(rng, ctx.cfg);
  ChainMap i = random_injection(rng, x, ctx.cfg);
  ChainMap g = random_map(rng, x, random_complex(rng, ctx.cfg));
  ctx.witness = {{"i", to_json(i)}, {"g", to_json(g)}};
  EXPECT(pushout_stability_check(i, g));
  EXPECT(gluing_check(random_gluing_diagram(rng, ctx.cfg)));
  EXPECT(sequential_check(random_sequential_diagram(rng, ctx.cfg, 3)));

  DGAlgebra r = ctx.trial % 2 ? random_square_zero(rng, ctx.small)
                              : truncated_polynomial(ctx.cfg.field, static_cast<int>(rng.uniform(2, 3)));
  RightModule m = random_cell_module(rng, r, ctx.small, 2);
  ctx.witness["alg"] = to_json(r);
  EXPECT_OK(validate_right_module(m, r));
  ChainComplex v = random_complex(rng, ctx.small);
  ChainMap q = random_quasi_iso(rng, v, ctx.small);
  ctx.witness["q"] = to_json(q);
  LeftModule a = free_left_module(v, r), b = free_left_module(q.dst(), r);
  ChainMap f = tensor_map(id(r.carrier), q);
  EXPECT(flatness_check(r, m, a, b, f));
  return {};
}

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = {
      {"monoidal-laws", {3, 5, 8}, monoidal_laws},
      {"eval-adjoints", {6, 7, 12}, eval_adjoints},
      {"coker-monoidal", {6, 7, 12}, coker_monoidal},
      {"smith-unwind", {2, 3, 4}, smith_unwind},
      {"scalars", {2, 3, 5}, scalars},
      {"quotient-kernel", {3, 4, 6}, quotient_kernel},
      {"model-predicates", {6, 7, 12}, model_predicates},
      {"left-quillen-coker", {6, 7, 12}, left_quillen_coker},
      {"stable-adjunct", {6, 7, 12}, stable_adjunct},
      {"purity-flatness", {6, 7, 12}, purity_flatness},
  };
  return suites;
}

std::uint64_t mix(std::uint64_t seed, const std::string& name, std::uint32_t p) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : name) h = (h ^ ch) * 1099511628211ull;
  return seed ^ (h + 0x9e3779b97f4a7c15ull * p);
}

SuiteReport run_one(const Suite& s, const SuiteConfig& c) {
  SuiteReport rep;
  rep.name = s.name;
  auto start = std::chrono::steady_clock::now();
  Ctx base;
  base.cfg.field = Field(c.p);
  base.cfg.lo = c.lo;
  base.cfg.hi = c.hi;
  base.cfg.max_dim = std::min(c.max_dim, s.caps.max_dim);
  base.cfg.max_span = s.caps.span;
  base.cfg.max_total = s.caps.total;
  base.small = base.cfg;
  base.small.max_dim = std::min<std::size_t>(c.max_dim, 1);
  base.small.max_span = 2;
  base.small.max_total = 2;
  const std::uint64_t stream = mix(c.seed, s.name, c.p);
  for (int t = 0; t < c.trials; ++t) {
    if (c.only_trial && *c.only_trial != t) continue;
    Ctx ctx = base;
    ctx.trial = t;
    Rng rng = Rng::for_trial(stream, static_cast<std::uint64_t>(t));
    std::string msg;
    try {
      msg = s.run(rng, ctx);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    if (msg.empty()) {
      ++rep.passed;
      continue;
    }
    ++rep.failed;
    TrialFailure fail{t, msg, ""};
    if (!c.counterexample_dir.empty()) {
      std::filesystem::create_directories(c.counterexample_dir);
      fail.file = c.counterexample_dir + "/" + s.name + "-p" + std::to_string(c.p) + "-seed" +
                  std::to_string(c.seed) + "-trial" + std::to_string(t) + ".json";
      Json j{{"suite", s.name}, {"p", c.p},         {"seed", c.seed},
             {"trial", t},      {"message", msg},   {"witness", ctx.witness}};
      write_file(fail.file, print_json(j));
    }
    rep.failures.push_back(std::move(fail));
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

Json to_json(const SuiteConfig& c) {
  Json j{{"seed", c.seed}, {"trials", c.trials}, {"maxDim", c.max_dim}, {"window", {c.lo, c.hi}}, {"p", c.p}};
  j["suites"] = c.suites;
  return j;
}

SuiteConfig suite_config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("/", "expected an object");
  SuiteConfig c;
  auto integer = [&](const char* k) -> long long {
    const Json& v = j.at(k);
    if (!v.is_number_integer()) throw ParseError(std::string("/") + k, "expected an integer");
    return v.get<long long>();
  };
  if (j.contains("seed")) {
    long long s = integer("seed");
    if (s < 0) throw ParseError("/seed", "seed must be nonnegative");
    c.seed = static_cast<std::uint64_t>(s);
  }
  if (j.contains("trials")) c.trials = static_cast<int>(integer("trials"));
  if (j.contains("maxDim")) {
    long long d = integer("maxDim");
    if (d < 0) throw ParseError("/maxDim", "must be nonnegative");
    c.max_dim = static_cast<std::size_t>(d);
  }
  if (j.contains("p")) {
    long long p = integer("p");
    if (p < 2 || p > 0xffffffffll) throw ParseError("/p", "p must be prime");
    c.p = static_cast<std::uint32_t>(p);
  }
  if (j.contains("window")) {
    const Json& w = j["window"];
    if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer())
      throw ParseError("/window", "expected [lo, hi]");
    c.lo = w[0].get<int>();
    c.hi = w[1].get<int>();
  }
  if (j.contains("suites")) {
    const Json& s = j["suites"];
    if (!s.is_array()) throw ParseError("/suites", "expected an array of names");
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (!s[k].is_string()) throw ParseError("/suites/" + std::to_string(k), "expected a string");
      c.suites.push_back(s[k].get<std::string>());
    }
  }
  check_config(c);
  return c;
}

void check_config(const SuiteConfig& c) {
  if (!is_prime(c.p)) throw ParseError("/p", "p must be prime");
  if (c.lo > c.hi) throw ParseError("/window", "empty window");
  if (c.trials < 0) throw ParseError("/trials", "must be nonnegative");
  for (std::size_t k = 0; k < c.suites.size(); ++k)
    if (!is_suite(c.suites[k])) throw ParseError("/suites/" + std::to_string(k), "unknown suite " + c.suites[k]);
}

bool RunReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.failed == 0; });
}

Json to_json(const RunReport& r, bool with_time) {
  Json suites = Json::array();
  for (const SuiteReport& s : r.suites) {
    Json fails = Json::array();
    for (const TrialFailure& f : s.failures) {
      Json x{{"trial", f.trial}, {"message", f.message}};
      if (!f.file.empty()) x["file"] = f.file;
      fails.push_back(x);
    }
    Json js{{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}, {"failures", fails}};
    if (with_time) js["wallMs"] = s.wall_ms;
    suites.push_back(js);
  }
  return Json{{"config", to_json(r.config)}, {"ok", r.ok()}, {"suites", suites}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Suite& s : registry()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

RunReport run_suites(const SuiteConfig& c) {
  check_config(c);
  RunReport rep;
  rep.config = c;
  for (const Suite& s : registry()) {
    if (!c.suites.empty() && std::find(c.suites.begin(), c.suites.end(), s.name) == c.suites.end()) continue;
    rep.suites.push_back(run_one(s, c));
  }
  return rep;
}

Json generate_instance(const std::string& kind, const SuiteConfig& c) {
  check_config(c);
  Rng rng(c.seed);
  GenConfig g;
  g.field = Field(c.p);
  g.lo = c.lo;
  g.hi = c.hi;
  g.max_dim = c.max_dim;
  g.max_span = c.hi - c.lo + 1;
  g.max_total = c.max_dim * static_cast<std::size_t>(g.max_span);
  if (kind == "complex") return to_json(random_complex(rng, g));
  if (kind == "map") {
    ChainComplex a = random_complex(rng, g), b = random_complex(rng, g);
    return to_json(random_map(rng, a, b));
  }
  if (kind == "arrow") return arrow_to_json(random_arrow(rng, g));
  if (kind == "square") {
    ArrowObject f = random_arrow(rng, g), h = random_arrow(rng, g);
    return to_json(random_square(rng, f, h));
  }
  g.max_dim = std::min<std::size_t>(g.max_dim, 3);
  g.max_span = std::min(g.max_span, 3);
  g.max_total = std::min<std::size_t>(g.max_total, 6);
  if (kind == "dga") return to_json(random_square_zero(rng, g));
  if (kind == "smith") return to_json(random_smith_ideal(rng, g, true));
  if (kind == "module") {
    g.max_dim = std::min<std::size_t>(g.max_dim, 2);
    g.max_total = std::min<std::size_t>(g.max_total, 4);
    SmithIdeal s = random_smith_ideal(rng, g, true);
    return to_json(random_smith_module(rng, s, g));
  }
  throw ParseError(kind, "unknown kind");
}

// ---------------------------------------------------------------------------

NegativeLift engineered_negative_lift(const Field& f, int kind, int k) {
  ChainComplex sk = ChainComplex::sphere(f, k), dk = ChainComplex::disk(f, k + 1), z = ChainComplex::zero(f);
  ChainMap incl(sk, dk, {{k, Matrix::identity(f, 1)}});
  LiftingProblem base{incl, ChainMap::zero(sk, z), id(sk), ChainMap::zero(dk, z)};
  NegativeLift out;
  switch (kind) {
    case 0:
      out.name = "sphere into disk against sphere to zero";
      out.base = base;
      break;
    case 1: {
      out.name = "L1 sphere into identity against L1 disk to zero";
      ArrowSquare left{L1(sk), id(sk), ChainMap::zero(z, sk), id(sk)};
      ArrowSquare right{L1(dk), L1(z), ChainMap::zero(z, z), ChainMap::zero(dk, z)};
      ArrowSquare top{L1(sk), L1(dk), ChainMap::zero(z, z), incl};
      out.arrow = ArrowLiftingProblem{left, right, top, zero_square(id(sk), L1(z))};
      break;
    }
    case 2: {
      out.name = "L1 disk into identity against identity to U0";
      ArrowSquare left{L1(dk), id(dk), ChainMap::zero(z, dk), id(dk)};
      ArrowSquare right{id(dk), U0(dk), id(dk), ChainMap::zero(dk, z)};
      ArrowSquare top{L1(dk), id(dk), ChainMap::zero(z, dk), id(dk)};
      out.arrow = ArrowLiftingProblem{left, right, top, zero_square(id(dk), U0(dk))};
      break;
    }
    case 3:
      out.name = "L0 of sphere into disk";
      out.arrow = ArrowLiftingProblem{L0(base.left), L0(base.right), L0(base.top), L0(base.bottom)};
      break;
    default:
      out.name = "L1 of sphere into disk";
      out.arrow = ArrowLiftingProblem{L1(base.left), L1(base.right), L1(base.top), L1(base.bottom)};
  }
  out.name += " in degree " + std::to_string(k);
  return out;
}

NegativeInstance engineered_negative_instance(Rng& rng, const GenConfig& cfg, int kind) {
  const Field& f = cfg.field;
  NegativeInstance out;
  if (kind == 4) {
    ChainComplex s = ChainComplex::unit(f), i2 = ChainComplex::from_maps(f, 0, 0, {{0, 2}}, {});
    ChainMap j(i2, s, {{0, Matrix::from_rows(f, {{1, 0}})}});
    out.name = "two-dimensional ideal of the ground field";
    out.ideal = bimodule_from_actions(ground_algebra(f), i2, left_unitor(i2), right_unitor(i2), j);
    return out;
  }
  if (kind == 5) {
    DGAlgebra r = truncated_polynomial(f, 2);
    ChainComplex s = ChainComplex::unit(f);
    ChainMap eps = augmentation(r);
    out.name = "span of the unit with augmented actions";
    out.ideal = bimodule_from_actions(r, s, left_unitor(s) * tensor_map(eps, id(s)),
                                      right_unitor(s) * tensor_map(id(s), eps), r.unit);
    return out;
  }
  SmithIdeal s = ideal_with_nonzero_i(rng, cfg);
  SmithModule m = unit_module(s);
  switch (kind) {
    case 0:
      out.name = "zero unit";
      s.alg.unit = ChainMap::zero(s.alg.unit.src(), s.alg.unit.dst());
      break;
    case 1:
      out.name = "zero multiplication";
      s.alg.mult = ChainMap::zero(s.alg.mult.src(), s.alg.mult.dst());
      break;
    case 2:
      out.name = "zero left action";
      s.ideal.left = ChainMap::zero(s.ideal.left.src(), s.ideal.left.dst());
      break;
    case 3:
      out.name = "zero right action";
      s.ideal.right = ChainMap::zero(s.ideal.right.src(), s.ideal.right.dst());
      break;
    case 6:
      out.name = "zero action on the source";
      m.m0.act = ChainMap::zero(m.m0.act.src(), m.m0.act.dst());
      break;
    case 7:
      out.name = "zero action on the target";
      m.m1.act = ChainMap::zero(m.m1.act.src(), m.m1.act.dst());
      break;
    case 8:
      out.name = "zero phi";
      m.phi = ChainMap::zero(m.phi.src(), m.phi.dst());
      break;
    default:
      out.name = "zero structure map";
      m.f = ChainMap::zero(m.f.src(), m.f.dst());
  }
  if (kind < 4)
    out.ideal = s;
  else
    out.module = m;
  return out;
}

}  // namespace smith
