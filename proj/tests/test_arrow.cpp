#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "smith/arrow.hpp"

using namespace smith;
using namespace smith::testing;

namespace {

GenConfig arrow_config(std::uint32_t p) { return small_config(p, 2, 3, 4); }

bool valid(const ArrowSquare& a) { return validate_square(a).ok(); }

bool permutation_components(const ArrowSquare& a) {
  for (const ChainMap* m : {&a.a0, &a.a1})
    for (int n = m->lo(); n <= m->hi(); ++n)
      if (!is_permutation(m->comp(n))) return false;
  return true;
}

// dim of the pushout of B <- A -> C in degree n, from the rank of the stacked legs
std::size_t pushout_dim_oracle(const ChainMap& f, const ChainMap& g, int n) {
  Matrix stacked = vstack({f.comp(n), g.comp(n)}, f.field(), f.src().dim(n));
  return f.dst().dim(n) + g.dst().dim(n) - rank(stacked);
}

}  // namespace

TEST_CASE("evaluation and adjoint functors") {
  Field f3(3);
  ChainComplex s = ChainComplex::unit(f3);
  ArrowObject zs = L1(s);
  CHECK(ev0(zs).is_zero());
  CHECK(ev1(zs) == s);
  CHECK(L0(s) == ChainMap::identity(s));
  CHECK(U1(s) == ChainMap::identity(s));
  CHECK(U0(s).dst().is_zero());
  CHECK(U0(s).src() == s);
  CHECK(adjunction_check(EvalAdjunction::L1Ev1, s, ChainMap::identity(s)));
}

TEST_CASE("evaluation of composite squares") {
  for (auto p : kPrimes) {
    Rng rng(p + 1000);
    auto cfg = arrow_config(p);
    for (int trial = 0; trial < 15; ++trial) {
      ArrowObject f = random_arrow(rng, cfg), g = random_arrow(rng, cfg), h = random_arrow(rng, cfg);
      ArrowSquare a = random_square(rng, f, g), b = random_square(rng, g, h);
      REQUIRE(valid(a));
      REQUIRE(valid(b));
      ArrowSquare ba = compose(b, a);
      CHECK(valid(ba));
      CHECK(ev0(ba) == compose(ev0(b), ev0(a)));
      CHECK(ev1(ba) == compose(ev1(b), ev1(a)));
    }
  }
}

TEST_CASE("four adjunctions on random inputs") {
  for (auto p : kPrimes) {
    Rng rng(p + 2000);
    auto cfg = arrow_config(p);
    for (int trial = 0; trial < 50; ++trial) {
      ChainComplex x = random_complex(rng, cfg);
      ArrowObject f = random_arrow(rng, cfg);
      for (auto which : {EvalAdjunction::L0Ev0, EvalAdjunction::L1Ev1, EvalAdjunction::Ev0U0, EvalAdjunction::Ev1U1})
        CHECK(adjunction_check(which, x, f));
    }
  }
}

TEST_CASE("unit and interaction identities") {
  for (auto p : kPrimes) {
    Rng rng(p + 3000);
    auto cfg = arrow_config(p);
    const ChainComplex s = ChainComplex::unit(Field(p));
    for (int trial = 0; trial < 20; ++trial) {
      ArrowObject f = random_arrow(rng, cfg);
      ChainComplex x = random_complex(rng, cfg);
      for (const ArrowSquare& u : {tensor_left_unitor(f), tensor_right_unitor(f), box_left_unitor(f), box_right_unitor(f)}) {
        CHECK(valid(u));
        CHECK(is_iso(u));
        CHECK(permutation_components(u));
      }
      CHECK(same_arrow(tensor_arrow(L1(x), f), L1(tensor_complex(x, f.dst()))));
      CHECK(same_arrow(pushout_product(L0(x), f).arrow, L0(tensor_complex(x, f.dst()))));
      CHECK(same_arrow(tensor_arrow(L0(x), f), tensor_map(ChainMap::identity(x), f)));
      CHECK(tensor_arrow(ChainMap::zero(ChainComplex::zero(Field(p)), ChainComplex::zero(Field(p))), f).dst().is_zero());
      CHECK(same_arrow(pushout_product(L1(s), f).arrow, f));
      CHECK(same_arrow(tensor_arrow(L0(s), f), f));
    }
  }
  Field f5(5);
  ChainComplex s = ChainComplex::unit(f5);
  PushoutProduct pp = pushout_product(L1(s), L1(s));
  CHECK(pp.arrow.src().is_zero());
  CHECK(same_graded_data(pp.arrow.dst(), s));
}

TEST_CASE("pushout product evaluations match the formulas") {
  for (auto p : kPrimes) {
    Rng rng(p + 4000);
    auto cfg = arrow_config(p);
    for (int trial = 0; trial < 20; ++trial) {
      ArrowObject f = random_arrow(rng, cfg), g = random_arrow(rng, cfg);
      PushoutProduct pp = pushout_product(f, g);
      CHECK(valid(pp.arrow));
      CHECK(same_graded_data(pp.arrow.dst(), tensor_complex(f.dst(), g.dst())));
      ChainMap l = tensor_map(ChainMap::identity(f.src()), g), r = tensor_map(f, ChainMap::identity(g.src()));
      for (int n = -7; n <= 7; ++n) CHECK(pp.arrow.src().dim(n) == pushout_dim_oracle(l, r, n));
      CHECK(compose(pp.arrow, pp.domain.from_b) == retype(tensor_map(f, ChainMap::identity(g.dst())),
                                                          pp.domain.from_b.src(), pp.arrow.dst()));
    }
  }
}

TEST_CASE("symmetries are involutive isomorphisms") {
  for (auto p : kPrimes) {
    Rng rng(p + 5000);
    auto cfg = arrow_config(p);
    for (int trial = 0; trial < 15; ++trial) {
      ArrowObject f = random_arrow(rng, cfg), g = random_arrow(rng, cfg);
      for (bool box : {false, true}) {
        ArrowSquare t = box ? box_symmetry(f, g) : tensor_symmetry(f, g);
        ArrowSquare t2 = box ? box_symmetry(g, f) : tensor_symmetry(g, f);
        CHECK(valid(t));
        CHECK(is_iso(t));
        CHECK(same_graded_data(compose(t2, t), identity_square(t.src)));
      }
    }
  }
}

TEST_CASE("bifunctoriality on squares") {
  for (auto p : kPrimes) {
    Rng rng(p + 6000);
    auto cfg = small_config(p, 2, 2, 3);
    for (int trial = 0; trial < 10; ++trial) {
      ArrowObject f = random_arrow(rng, cfg), f1 = random_arrow(rng, cfg), f2 = random_arrow(rng, cfg);
      ArrowObject g = random_arrow(rng, cfg), g1 = random_arrow(rng, cfg), g2 = random_arrow(rng, cfg);
      ArrowSquare a = random_square(rng, f, f1), a2 = random_square(rng, f1, f2);
      ArrowSquare b = random_square(rng, g, g1), b2 = random_square(rng, g1, g2);
      CHECK(same_graded_data(tensor_square(compose(a2, a), compose(b2, b)),
                             compose(tensor_square(a2, b2), tensor_square(a, b))));
      ArrowSquare lhs = pushout_product_square(compose(a2, a), compose(b2, b));
      CHECK(valid(lhs));
      CHECK(same_graded_data(lhs, compose(pushout_product_square(a2, b2), pushout_product_square(a, b))));
    }
  }
}

TEST_CASE("associativity through the punctured cube") {
  Field f2(2);
  ChainComplex s = ChainComplex::unit(f2);
  PuncturedCube unit_cube = punctured_cube_colimit(L1(s), L1(s), L1(s));
  CHECK(unit_cube.object.is_zero());
  CHECK(same_graded_data(unit_cube.arrow.dst(), s));

  for (auto p : kPrimes) {
    Rng rng(p + 7000);
    auto cfg = small_config(p, 2, 2, 3);
    for (int trial = 0; trial < 12; ++trial) {
      ArrowObject f = random_arrow(rng, cfg), g = random_arrow(rng, cfg), h = random_arrow(rng, cfg);
      BoxAssociativity w = box_associativity(f, g, h);
      CHECK(valid(w.left_to_cube));
      CHECK(valid(w.right_to_cube));
      CHECK(valid(w.associator));
      CHECK(is_iso(w.associator));
      ArrowSquare t = tensor_associator(f, g, h);
      CHECK(valid(t));
      CHECK(permutation_components(t));
      // with f an identity the cube arrow is L0(X) box (g box h) = L0(X (x) Y1 (x) Z1)
      ChainComplex x = random_complex(rng, cfg);
      PuncturedCube c = punctured_cube_colimit(L0(x), g, h);
      CHECK(is_isomorphism(c.arrow));
      for (int n = -9; n <= 9; ++n)
        CHECK(c.object.dim(n) == tensor_complex(x, tensor_complex(g.dst(), h.dst())).dim(n));
    }
  }
}

TEST_CASE("triangle law for the pushout product") {
  for (auto p : kPrimes) {
    Rng rng(p + 7500);
    auto cfg = small_config(p, 2, 2, 3);
    const ChainComplex s = ChainComplex::unit(Field(p));
    for (int trial = 0; trial < 6; ++trial) {
      ArrowObject f = random_arrow(rng, cfg), g = random_arrow(rng, cfg);
      ArrowSquare lhs = pushout_product_square(box_right_unitor(f), identity_square(g));
      ArrowSquare rhs = compose(pushout_product_square(identity_square(f), box_left_unitor(g)),
                                box_associator(f, L1(s), g));
      CHECK(same_graded_data(lhs, rhs));
    }
  }
}

TEST_CASE("closed structures") {
  for (auto p : kPrimes) {
    Rng rng(p + 8000);
    auto cfg = small_config(p, 2, 2, 3);
    const ChainComplex s = ChainComplex::unit(Field(p));
    for (int trial = 0; trial < 12; ++trial) {
      ArrowObject f = random_arrow(rng, cfg), g = random_arrow(rng, cfg), h = random_arrow(rng, cfg);
      CHECK(closed_adjunction_check(ArrowStructure::Tensor, f, g, h));
      CHECK(closed_adjunction_check(ArrowStructure::Box, f, g, h));
      HomTensor ht = hom_tensor(L0(s), g);
      HomBox hb = hom_pushout(L1(s), g);
      for (int n = -4; n <= 4; ++n) {
        CHECK(ht.arrow.src().dim(n) == g.src().dim(n));
        CHECK(ht.arrow.dst().dim(n) == g.dst().dim(n));
        CHECK(rank(ht.arrow.comp(n)) == rank(g.comp(n)));
        CHECK(hb.arrow.src().dim(n) == g.src().dim(n));
        CHECK(hb.arrow.dst().dim(n) == g.dst().dim(n));
        CHECK(rank(hb.arrow.comp(n)) == rank(g.comp(n)));
      }
      ArrowObject zero = U0(ChainComplex::zero(Field(p)));
      CHECK(hom_tensor(f, zero).arrow.dst().is_zero());
      CHECK(hom_pushout(f, L1(ChainComplex::zero(Field(p)))).arrow.is_zero());
    }
  }
}
