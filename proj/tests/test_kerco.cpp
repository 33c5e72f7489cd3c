#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "smith/kerco.hpp"

using namespace smith;
using namespace smith::testing;

namespace {

bool valid(const ArrowSquare& a) { return validate_square(a).ok(); }

bool identity_components(const ChainMap& m) {
  for (int n = m.lo(); n <= m.hi(); ++n)
    if (!m.comp(n).is_identity()) return false;
  return true;
}

// dim coker f in degree n from ranks only
std::size_t coker_dim_oracle(const ChainMap& f, int n) { return f.dst().dim(n) - rank(f.comp(n)); }

}  // namespace

TEST_CASE("cokernel and kernel examples") {
  Field f3(3);
  ChainComplex s = ChainComplex::unit(f3), d1 = ChainComplex::disk(f3, 1);
  ArrowObject c = coker_arrow(L1(s));
  CHECK(same_arrow(c, L0(s)));
  CHECK(identity_components(c));

  Rng rng(17);
  ChainComplex x = random_complex(rng, small_config(3));
  ArrowObject cx = coker_arrow(ChainMap::identity(x));
  CHECK(cx.src() == x);
  CHECK(cx.dst().is_zero());

  ChainMap incl(s, d1, {{0, Matrix::from_rows(f3, {{1}})}});
  REQUIRE(validate_map(incl).ok());
  ArrowObject q = coker_arrow(incl);
  CHECK(q.src() == d1);
  CHECK(same_graded_data(q.dst(), ChainComplex::sphere(f3, 1)));

  ArrowObject kx = ker_arrow(U0(x));
  CHECK(same_arrow(kx, ChainMap::identity(x)));
  ArrowObject kid = ker_arrow(ChainMap::identity(x));
  CHECK(kid.src().is_zero());
  CHECK(kid.dst() == x);

  ChainMap proj(d1, ChainComplex::sphere(f3, 1), {{1, Matrix::from_rows(f3, {{1}})}});
  REQUIRE(validate_map(proj).ok());
  ArrowObject kp = ker_arrow(proj);
  CHECK(same_graded_data(kp.src(), s));
  CHECK(same_arrow(kp, incl));
}

TEST_CASE("cokernel dimensions by rank") {
  for (auto p : kPrimes) {
    Rng rng(p + 11);
    auto cfg = small_config(p, 3, 4, 8);
    for (int trial = 0; trial < 50; ++trial) {
      ArrowObject f = random_arrow(rng, cfg);
      ArrowObject c = coker_arrow(f);
      ArrowObject k = ker_arrow(f);
      CHECK(valid(c));
      CHECK(valid(k));
      for (int n = -3; n <= 3; ++n) {
        CHECK(c.dst().dim(n) == coker_dim_oracle(f, n));
        CHECK(k.src().dim(n) == f.src().dim(n) - rank(f.comp(n)));
      }
    }
  }
}

TEST_CASE("coker is left adjoint to ker") {
  for (auto p : kPrimes) {
    Rng rng(p + 22);
    auto cfg = small_config(p, 2, 3, 4);
    for (int trial = 0; trial < 50; ++trial) {
      ArrowObject f = random_arrow(rng, cfg), g = random_arrow(rng, cfg);
      CHECK(coker_ker_adjunction_check(f, g));
      // transposition is a bijection on a random square
      ArrowObject cf = coker_arrow(f);
      ArrowSquare b = random_square(rng, cf, g);
      ArrowSquare a = transpose_to_ker(b, f, g);
      CHECK(valid(a));
      CHECK(same_graded_data(transpose_to_coker(a, f, g), b));

      ChainMap inj = random_injection(rng, f.src(), cfg);
      CHECK(is_iso(coker_ker_unit(inj)));
      ChainMap sur = random_surjection(rng, g.dst(), cfg);
      CHECK(is_iso(coker_ker_counit(sur)));
    }
  }
  Field f2(2);
  Rng rng(5);
  ChainComplex x = random_complex(rng, small_config(2));
  ArrowObject iso = random_automorphism(rng, x);
  ArrowObject p = random_arrow(rng, small_config(2));
  CHECK(square_space_dim(coker_arrow(iso), p) == square_space_dim(U0(x), p));
}

TEST_CASE("cokernel is strong monoidal") {
  Field f5(5);
  ChainComplex s = ChainComplex::unit(f5);
  ArrowSquare unit = monoidal_comparison_iso(L1(s), L1(s));
  CHECK(same_arrow(unit.src, L0(s)));
  CHECK(same_arrow(unit.dst, L0(tensor_complex(s, s))));

  for (auto p : kPrimes) {
    Rng rng(p + 33);
    auto cfg = small_config(p, 2, 3, 4);
    const ChainComplex sp = ChainComplex::unit(Field(p));
    for (int trial = 0; trial < 50; ++trial) {
      ArrowObject f = random_arrow(rng, cfg), g = random_arrow(rng, cfg);
      ArrowSquare c = monoidal_comparison_iso(f, g);
      CHECK(valid(c));
      CHECK(is_iso(c));
      ArrowSquare inv = monoidal_comparison_inverse(f, g);
      CHECK(valid(inv));
      CHECK(same_graded_data(compose(inv, c), identity_square(c.src)));
      for (int n = -6; n <= 6; ++n)
        CHECK(c.src.dst().dim(n) == tensor_complex(coker_arrow(f).dst(), coker_arrow(g).dst()).dim(n));
      ArrowSquare u = monoidal_comparison_iso(L1(sp), g);
      CHECK(identity_components(u.a1));
      if (trial % 5 == 0) {
        ArrowObject f2 = random_arrow(rng, cfg), g2 = random_arrow(rng, cfg);
        CHECK(comparison_naturality_check(random_square(rng, f, f2), random_square(rng, g, g2)));
      }
    }
  }
}

TEST_CASE("kernel is lax monoidal") {
  for (auto p : kPrimes) {
    Rng rng(p + 44);
    auto cfg = small_config(p, 2, 3, 4);
    for (int trial = 0; trial < 20; ++trial) {
      ChainComplex x = random_complex(rng, cfg);
      ArrowSquare l = kernel_lax_structure(U0(x), U0(x));
      CHECK(valid(l));
      CHECK(is_iso(l));
      ArrowSquare z = kernel_lax_structure(ChainMap::identity(x), ChainMap::identity(x));
      CHECK(z.src.src().is_zero());
      CHECK(z.dst.src().is_zero());

      ChainMap f = random_surjection(rng, random_complex(rng, cfg), cfg);
      ChainMap g = random_surjection(rng, random_complex(rng, cfg), cfg);
      ArrowSquare lam = kernel_lax_structure(f, g);
      CHECK(valid(lam));
      ArrowObject kf = ker_arrow(f), kg = ker_arrow(g);
      ArrowSquare back = transpose_to_coker(lam, pushout_product(kf, kg).arrow, tensor_arrow(f, g));
      ArrowSquare expected =
          compose(tensor_square(coker_ker_counit(f), coker_ker_counit(g)), monoidal_comparison_iso(kf, kg));
      CHECK(same_graded_data(back, expected));
    }
  }
}
