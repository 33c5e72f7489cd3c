#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "smith/suites.hpp"

using namespace smith;
using namespace smith::testing;

namespace {

bool same_data_or_graded(const ChainComplex& a, const ChainComplex& b) { return a == b; }
bool same_data_or_graded(const ChainMap& a, const ChainMap& b) { return a == b; }
bool same_data_or_graded(const ArrowSquare& a, const ArrowSquare& b) { return a == b; }
bool same_data_or_graded(const DGAlgebra& a, const DGAlgebra& b) { return same_data(a, b); }
bool same_data_or_graded(const SmithIdeal& a, const SmithIdeal& b) { return same_data(a, b); }
bool same_data_or_graded(const SmithModule& a, const SmithModule& b) { return same_data(a, b); }

template <class T, class Parse>
void check_round_trip(const T& x, Parse parse) {
  std::string text = print_json(to_json(x));
  T y = parse(parse_json(text));
  CHECK(print_json(to_json(y)) == text);
  CHECK(same_data_or_graded(x, y));
}

std::string where_of(const std::string& text, ChainComplex (*parse)(const Json&, const std::string&)) {
  try {
    parse(parse_json(text), "");
  } catch (const ParseError& e) {
    return e.where();
  }
  return "no error";
}

}  // namespace

TEST_CASE("serialization round trips byte for byte") {
  for (auto p : kPrimes) {
    Rng rng(p * 13);
    auto cfg = small_config(p);
    for (int trial = 0; trial < 10; ++trial) {
      ChainComplex c = random_complex(rng, cfg);
      check_round_trip(c, [](const Json& j) { return complex_from_json(j); });
      ChainMap f = random_map(rng, c, random_complex(rng, cfg));
      check_round_trip(f, [](const Json& j) { return map_from_json(j); });
      ArrowObject a = random_arrow(rng, cfg);
      CHECK(print_json(arrow_to_json(arrow_from_json(arrow_to_json(a)))) == print_json(arrow_to_json(a)));
      check_round_trip(random_square(rng, a, random_arrow(rng, cfg)),
                       [](const Json& j) { return square_from_json(j); });
      check_round_trip(random_square_zero(rng, cfg), [](const Json& j) { return dga_from_json(j); });
      SmithIdeal s = random_smith_ideal(rng, cfg, true);
      check_round_trip(s, [](const Json& j) { return smith_from_json(j); });
      check_round_trip(random_smith_module(rng, s, cfg), [](const Json& j) { return module_from_json(j); });
    }
  }
}

TEST_CASE("parse errors carry their location") {
  auto cx = [](const Json& j, const std::string& at) { return complex_from_json(j, at); };
  CHECK(where_of(R"({"p": 4, "lo": 0, "hi": 0, "dims": {"0": 1}})", cx) == "/p");
  CHECK(where_of(R"({"p": 3, "lo": 0, "hi": 0})", cx) == "/dims");
  CHECK(where_of(R"({"p": 3, "lo": 0, "hi": 1, "dims": {"0": 1, "1": 1}, "diff": {"1": [[-1]]}})", cx) ==
        "/diff/1/0/0");
  CHECK(where_of(R"({"p": 3, "lo": 0, "hi": 1, "dims": {"0": 1, "1": 1}, "diff": {"1": [[1], [1]]}})", cx) ==
        "/diff/1");
  CHECK(where_of(R"({"p": 3, "lo": 0, "hi": 0, "dims": {"x": 1}})", cx) == "/dims/x");
  CHECK(where_of(R"({"p": 3, "lo": 0, "hi": 0, "dims": {"5": 1}})", cx) == "/dims/5");
  CHECK(where_of(R"({"p": 3, "lo": 0, "hi": 0, "dims": {"0": 1.5}})", cx) == "/dims/0");
  CHECK(where_of(R"({"p": 3, "lo": 0,)", cx) == "byte 18");

  // entries are reduced mod p
  ChainComplex c = complex_from_json(parse_json(R"({"p": 3, "lo": 0, "hi": 1, "dims": {"0": 1, "1": 1},
                                                    "diff": {"1": [[7]]}})"));
  CHECK(c.diff(1)(0, 0) == 1);

  // d^2 != 0 parses but fails validation at the right degree
  Json bad = parse_json(R"({"p": 2, "lo": 0, "hi": 2, "dims": {"0": 1, "1": 1, "2": 1},
                            "diff": {"1": [[1]], "2": [[1]]}})");
  Verdict v = validate_complex(complex_from_json(bad));
  CHECK_FALSE(v.ok());
  CHECK(v.failure.find('2') != std::string::npos);

  try {
    smith_from_json(parse_json(R"({"alg": {}})"), "");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.where() == "/alg/carrier");
  }
}

TEST_CASE("quotient examples") {
  for (auto p : kPrimes) {
    Field f(p);
    MonoidHom q = quotient_dga(polynomial_ideal(f, 2, 1));
    CHECK(q.dst.carrier.total_dim() == 1);
    CHECK(homology(q.dst.carrier).dim(0) == 1);

    DGAlgebra r = truncated_polynomial(f, 3);
    SmithIdeal zero = ideal_from_inclusion(r, ChainMap::zero(ChainComplex::zero(f), r.carrier));
    CHECK(validate_smith_ideal(zero).ok());
    CHECK(print_json(to_json(quotient_dga(zero).dst)) == print_json(to_json(r)));

    SmithIdeal all = ideal_from_inclusion(r, ChainMap::identity(r.carrier));
    CHECK(validate_smith_ideal(all).ok());
    CHECK(quotient_dga(all).dst.carrier.is_zero());
  }
}

TEST_CASE("engineered negatives") {
  for (auto p : kPrimes) {
    Field f(p);
    for (int kind = 0; kind < 5; ++kind)
      for (int k = -2; k <= 1; ++k) {
        NegativeLift n = engineered_negative_lift(f, kind, k);
        CAPTURE(n.name);
        if (n.base) CHECK_FALSE(solve_lifting(*n.base));
        if (n.arrow) CHECK_FALSE(solve_lifting(*n.arrow));
      }
    Rng rng(p);
    for (int kind = 0; kind < 10; ++kind) {
      NegativeInstance n = engineered_negative_instance(rng, small_config(p), kind);
      CAPTURE(n.name);
      if (n.ideal) CHECK_FALSE(validate_smith_ideal(*n.ideal).ok());
      if (n.module) CHECK_FALSE(validate_smith_module(*n.module).ok());
    }
  }
}

TEST_CASE("suite harness") {
  SuiteConfig c;
  c.trials = 0;
  RunReport empty = run_suites(c);
  CHECK(empty.ok());
  CHECK(empty.suites.size() == suite_names().size());
  for (const auto& s : empty.suites) CHECK(s.passed + s.failed == 0);

  c.suites = {"no-such-suite"};
  CHECK_THROWS_AS(run_suites(c), ParseError);

  c = SuiteConfig{};
  c.seed = 7;
  c.p = 5;
  c.trials = 10;
  c.suites = {"coker-monoidal", "eval-adjoints"};
  RunReport a = run_suites(c), b = run_suites(c);
  CHECK(a.ok());
  CHECK(print_json(to_json(a)) == print_json(to_json(b)));
  CHECK(a.suites[0].name == "eval-adjoints");
  CHECK(a.suites[0].passed == 10);

  c.only_trial = 3;
  RunReport one = run_suites(c);
  CHECK(one.suites[0].passed == 1);

  Json cj = to_json(c);
  SuiteConfig back = suite_config_from_json(cj);
  CHECK(back.seed == 7);
  CHECK(back.p == 5);
  CHECK(back.suites == c.suites);
  CHECK_THROWS_AS(suite_config_from_json(parse_json(R"({"p": 6})")), ParseError);
  CHECK_THROWS_AS(suite_config_from_json(parse_json(R"({"window": [2, 1]})")), ParseError);
}

TEST_CASE("generators respect max dim zero") {
  Rng rng(5);
  GenConfig g = small_config(3, 0);
  CHECK(random_complex(rng, g).is_zero());
}
