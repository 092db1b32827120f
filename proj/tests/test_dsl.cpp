#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hyperlattice/dsl.h"
#include "hyperlattice/errors.h"
#include "hyperlattice/fields.h"

using namespace hyperlattice;

namespace {

std::vector<std::string> corpus() {
  std::ifstream in(HYPERLATTICE_CORPUS);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

Point origin(int depth = 2) { return make_point({0}, {0}, depth); }

OperatorExpr gen(bool dagger, Statistics st = Statistics::bose) {
  return OperatorExpr::generator(Generator{1, origin(), std::nullopt, dagger}, st, 1);
}

}  // namespace

TEST_CASE("corpus round trip") {
  const auto lines = corpus();
  REQUIRE(lines.size() >= 50);
  for (const auto& text : lines) {
    CAPTURE(text);
    const Ast a = parse(text);
    const std::string printed = print(a);
    CHECK(parse(printed) == a);
    CHECK(print(parse(printed)) == printed);
  }
}

TEST_CASE("canonical forms reparse to the same value") {
  for (const auto& text : corpus()) {
    CAPTURE(text);
    const Value v = evaluate(text);
    const std::string canonical = v.str();
    CAPTURE(canonical);
    const Value again = evaluate(canonical);
    CHECK(again.str() == canonical);
    if (v.is_scalar() && again.is_scalar()) {
      CHECK(std::get<Scalar>(again.v) == std::get<Scalar>(v.v));
    } else if (!v.is_scalar() && !again.is_scalar()) {
      CHECK(std::get<OperatorExpr>(again.v) == std::get<OperatorExpr>(v.v));
    }
  }
}

TEST_CASE("golden evaluations") {
  CHECK(evaluate("vev( A[1](site(0;0)) * Ad[1](site(0;0)) )").str() == "1");
  CHECK(evaluate("comm( phi[1]([0];0), phid[1]([0];0) )").str() == "1");
  CHECK(evaluate("vev( Ad[1](site(0;0)) )").str() == "0");
  CHECK(evaluate("comm(phi[1]([0]; 0), phid[1]([1]; 0))").str() == "0");
  CHECK(evaluate("comm(phi[1]([0]; 1), phid[1]([0]; -1))").str() == "0");
  CHECK(evaluate("acomm(C[1](site(0; 0)), Cd[1](site(0; 0)))").str() == "1");
  CHECK(evaluate("Cd[1](site(0; 0))*Cd[1](site(0; 0))").str() == "0");
  CHECK(evaluate("vev((A[1](site(0; 0)) + Ad[1](site(0; 0)))^4)").str() == "3");
}

TEST_CASE("values agree with direct construction") {
  const Window window{};
  const int w = 3;
  CHECK(std::get<Scalar>(evaluate("W^(1/2)*W^(1/2)").v) == Scalar(w));
  CHECK(std::get<Scalar>(evaluate("W^(-1/2)").v) == Scalar::sqrt_w_power(w, -1));
  CHECK(std::get<Scalar>(evaluate("z[3]^3").v) == Scalar(1));
  CHECK(std::get<Scalar>(evaluate("i^2").v) == Scalar(-1));
  CHECK(std::get<Scalar>(evaluate("d^-1*d").v) == Scalar(1));
  CHECK(std::get<Scalar>(evaluate("-1*d^-1 + 3 + 2/3*d^2").v) ==
        Scalar(Hyper::parse("-1*d^-1 + 3 + 2/3*d^2", window)));
  CHECK(std::get<OperatorExpr>(evaluate("A[1](site(0; 0))*Ad[1](site(0; 0))").v) ==
        multiply(gen(false), gen(true)));
  CHECK(std::get<OperatorExpr>(evaluate("C[1](site(0; 0))*Cd[1](site(0; 0))").v) ==
        multiply(gen(false, Statistics::fermi), gen(true, Statistics::fermi)));
  const LatticeSpec spec{1, 2, {}};
  CHECK(std::get<OperatorExpr>(evaluate("phid[1]([1/2]; -1)").v) ==
        expand(phid({Rational(1, 2)}, 1, {-1}), spec, Statistics::bose));
  EvalContext fermi;
  fermi.statistics = Statistics::fermi;
  CHECK(std::get<OperatorExpr>(evaluate("phi[1]([0])", fermi).v) == expand(phi({0}), spec, Statistics::fermi));
  EvalContext wide;
  wide.spec.half_width = 2;
  CHECK(std::get<Scalar>(evaluate("W", wide).v) == Scalar(5));
  CHECK(std::get<OperatorExpr>(evaluate("comm(phi[1]([0]; 2), phid[1]([0]; 2))", wide).v) ==
        OperatorExpr::constant(Scalar(1), Statistics::bose, 1));
}

TEST_CASE("syntax errors carry positions") {
  const auto position = [](const std::string& text) {
    try {
      parse(text);
    } catch (const SyntaxError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair{0, 0};
  };
  CHECK(position("1 +\n  * 2") == std::pair{2, 3});
  CHECK(position("A[1](site(0;0)") == std::pair{1, 15});
  CHECK(position("foo") == std::pair{1, 1});
  CHECK(position("1 $ 2") == std::pair{1, 3});
  CHECK(position("comm(d)") == std::pair{1, 7});
  CHECK(position("1/0") == std::pair{1, 1});
  CHECK(position("") == std::pair{1, 1});
  CHECK(position("d d") == std::pair{1, 3});
}

TEST_CASE("elaboration errors") {
  CHECK_THROWS_AS(evaluate("A[1](site(0; 0))*C[1](site(0; 0))"), StatisticsMismatch);
  CHECK_THROWS_AS(evaluate("A[1](site(0; 0))*A[1](site(0; 0), site(0; 0))"), DimensionError);
  CHECK_THROWS_AS(evaluate("A[2](site(0; 0))"), DimensionError);
  CHECK_THROWS_AS(evaluate("A[1](site(0; 0, 0, 0))"), DimensionError);
  CHECK_THROWS_AS(evaluate("phi[1]([0]; 2)"), OutOfWindow);
  CHECK_THROWS_AS(evaluate("phi[1]([0, 0]; 1)"), DimensionError);
  CHECK_THROWS_AS(evaluate("(1 + d)^-1"), EvalError);
  CHECK_THROWS_AS(evaluate("W^(1/3)"), EvalError);
  CHECK_THROWS_AS(evaluate("d^(1/2)"), EvalError);
}
