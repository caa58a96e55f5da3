#include <doctest.h>

#include "support.hpp"
#include "xoph/format.hpp"
#include "xoph/json_io.hpp"

using namespace xoph;
using namespace xoph::testing;

TEST_SUITE("render") {
  TEST_CASE("polynomials") {
    CHECK(render(X({4, 0, 8})) == "4 + 8x^2");
    CHECK(render(X({0, 4, 0, Rat(8, 3)})) == "4x + 8/3 x^3");
    CHECK(render(X({0, -1, 0, 1})) == "-x + x^3");
    CHECK(render(X({1, -2})) == "1 - 2x");
    CHECK(render(Poly(Var::x)) == "0");
    CHECK(render(N({0, 1})) == "n");
    CHECK(render(X({4, 0, 8}), Style::latex) == "4 + 8 x^{2}");
    CHECK(render(X({0, Rat(32, 5)}), Style::latex) == "\\frac{32}{5} x");
  }

  TEST_CASE("rational functions in x clear denominators") {
    CHECK(render(RatFun(X({1}), X({4, 0, 8}))) == "1/(4 + 8x^2)");
    CHECK(render(RatFun(X({0, -1}), X({1, 0, 1}))) == "-x/(1 + x^2)");
    CHECK(render(RatFun(X({1, 1}), X({0, 2}))) == "(1 + x)/(2x)");
    CHECK(render(RatFun(X({3}))) == "3");
  }

  TEST_CASE("integer roots") {
    const FactoredPoly fp = factor_integer_roots(pochhammer(-5, 2) * pochhammer(-2, 3) * Rat(8));
    CHECK(fp.constant == 8);
    CHECK(fp.rest.degree() == 0);
    REQUIRE(fp.runs.size() == 2);
    CHECK(fp.runs[0].shift == -5);
    CHECK(fp.runs[0].count == 2);
    CHECK(fp.runs[1].shift == -2);
    CHECK(fp.runs[1].count == 3);

    const FactoredPoly irreducible = factor_integer_roots(N({80, -57, 9}) * N({-7, 1}) * Rat(7, 4));
    CHECK(irreducible.rest == N({80, -57, 9}));
    CHECK(irreducible.constant == Rat(7, 4));

    CHECK(factor_integer_roots(Poly(Var::n)).constant == 0);
  }

  TEST_CASE("factored coefficients") {
    CHECK(render_factored(RatFun(pochhammer(-2, 2) * Rat(1, 4), pochhammer(1, 2))) == "1/4 (n-2)_2 / (n+1)_2");
    CHECK(render_factored(RatFun(N({-12, 6}))) == "6 (n-2)");
    CHECK(render_factored(RatFun(N({-4, 1}) * N({-4, 1}) * N({-2, 1}))) == "(n-4)^2 (n-2)");
    CHECK(render_factored(RatFun(N({1}), pochhammer(0, 2) * pochhammer(3, 2))) == "1 / ((n)_2 (n+3)_2)");
    CHECK(render_factored(RatFun(N({0, -3}))) == "-3 n");
    CHECK(render_factored(RatFun(pochhammer(-2, 2), pochhammer(1, 2)), Style::latex) ==
          "\\frac{(n-2)_{2}}{(n+1)_{2}}");
    // Any rational function survives the trip through factoring unchanged in value.
    Gen g(40);
    for (int i = 0; i < 50; ++i) {
      const Poly p = g.nonzero_poly(Var::n, 4) * pochhammer(g.integer(-6, 6), static_cast<unsigned>(g.integer(0, 3)));
      const FactoredPoly fp = factor_integer_roots(p);
      Poly back = fp.rest * fp.constant;
      for (const auto& run : fp.runs) back *= pochhammer(run.shift, run.count);
      CHECK(back == p);
    }
  }

  TEST_CASE("linear factors") {
    CHECK(render_linear_factors(pi(Partition({1, 1}))) == "4(n-1)(n-2)");
    CHECK(render_linear_factors(pi(Partition())) == "1");
    CHECK(render_linear_factors(pi(Partition({1, 1, 2, 2}))) == "16(n-1)(n-2)(n-4)(n-5)");
  }

  TEST_CASE("operators") {
    CHECK(render(op_A(Partition({1}))) == "(2x) D + (-2)");
    CHECK(render(delta_op()) == "1/2 Theta + n Theta^-1");
    CHECK(render(ShiftOp::identity()) == "1");
    CHECK(render(ShiftOp()) == "0");
    CHECK(render(gamma_op(), Style::latex) == "2 n \\Theta^{-1}");
  }

  TEST_CASE("recurrences") {
    CHECK(render(recurrence(Partition(), X({0, 1}))) == "(x) hhat(n,x) = 1/2 hhat(n+1,x) + n hhat(n-1,x)");
    const Recurrence rec = recurrence(Partition({1, 1}), X({0, 3, 0, 2}));
    CHECK(render(rec) ==
          "(3x + 2x^3) hhat(n,x) = 1/4 (n-2)_2 / (n+1)_2 hhat(n+3,x) + 3/2 (n-2) hhat(n+1,x)"
          " + 3 (n-1)_2 hhat(n-1,x) + 2 (n-2)_3 hhat(n-3,x)");
    const Recurrence neg{Partition(), X({0, 1}), ShiftOp::term(1, NR({-1})) + ShiftOp::term(0, NR({0, -2}))};
    CHECK(render(neg) == "(x) hhat(n,x) = -hhat(n+1,x) - 2 n hhat(n,x)");
  }
}

TEST_SUITE("json") {
  TEST_CASE("schema") {
    const Recurrence rec = recurrence(Partition({1, 1}), X({0, 3, 0, 2}));
    const nlohmann::json j = to_json(rec);
    CHECK(j["partition"] == nlohmann::json::array({1, 1}));
    CHECK(j["f"]["coeffs"][1] == nlohmann::json::array({"3", "1"}));
    REQUIRE(j["terms"].size() == 4);
    CHECK(j["terms"][0]["offset"] == 3);
    CHECK(j["terms"][3]["offset"] == -3);
    CHECK(j["terms"][0]["num"].is_array());
    CHECK(j["terms"][0]["den"].is_array());
  }

  TEST_CASE("round trip") {
    for (const auto& lam : test_partitions()) {
      const Recurrence rec = recurrence(lam, minimal_stabilizer(lam));
      CHECK(parse_recurrence(serialize(rec)) == rec);
      CHECK(serialize(parse_recurrence(serialize(rec))) == serialize(rec));
    }
    for (int k = 1; k <= 4; ++k) {
      const Recurrence rec = one_step_recurrence(k);
      CHECK(recurrence_from_json(to_json(rec)) == rec);
    }
  }

  TEST_CASE("big integers are strings") {
    const Recurrence rec{Partition(), X({Rat(BigInt("123456789012345678901234567891"), 7)}), ShiftOp::identity()};
    const nlohmann::json j = to_json(rec);
    CHECK(j["f"]["coeffs"][0][0] == "123456789012345678901234567891");
    CHECK(recurrence_from_json(j) == rec);
  }

  TEST_CASE("schema violations") {
    const std::string good = serialize(recurrence(Partition({1}), X({0, 0, 1})));
    CHECK_NOTHROW(parse_recurrence(good));
    auto broken = [&](auto&& mutate) {
      nlohmann::json j = nlohmann::json::parse(good);
      mutate(j);
      return j;
    };
    CHECK_THROWS_AS(parse_recurrence("not json"), std::invalid_argument);
    CHECK_THROWS_AS(recurrence_from_json(broken([](auto& j) { j.erase("terms"); })), std::invalid_argument);
    CHECK_THROWS_AS(recurrence_from_json(broken([](auto& j) { j["partition"] = {2, 1}; })), std::invalid_argument);
    CHECK_THROWS_AS(recurrence_from_json(broken([](auto& j) { j["f"]["coeffs"][0] = {"1", "0"}; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(recurrence_from_json(broken([](auto& j) { j["f"]["coeffs"][0] = {1, 2}; })),
                    std::invalid_argument);
    CHECK_THROWS_AS(recurrence_from_json(broken([](auto& j) { j["terms"][0]["den"] = nlohmann::json::array(); })),
                    std::invalid_argument);
    CHECK_THROWS_AS(recurrence_from_json(broken([](auto& j) { j["terms"][1]["offset"] = j["terms"][0]["offset"]; })),
                    std::invalid_argument);
  }
}
