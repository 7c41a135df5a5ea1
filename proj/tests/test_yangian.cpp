#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wsa/miura.hpp"
#include "wsa/yangian.hpp"

using namespace wsa;

TEST_CASE("Cartan data tables") {
  CartanData cd(3, 2);  // N = 5, odd nodes 0 and 3
  CHECK(cd.a(3, 3) == 0);
  CHECK(cd.a(0, 0) == 1 + (-1));  // p(0)=p(5)=1, p(1)=0
  CHECK(cd.a(0, 4) == 1);
  CHECK(cd.a(4, 0) == 1);
  CHECK(cd.a(1, 2) == -1);
  CHECK(cd.a(1, 3) == 0);
  CHECK(cd.mmat(4, 0) == 1);
  CHECK(cd.mmat(0, 4) == -1);
  CHECK(cd.mmat(1, 2) == -1);  // m_{i,i+1} = -(-1)^{p(i+1)}, p(2)=0
  CHECK(cd.mmat(2, 1) == 1);   // antisymmetric partner
  CHECK(cd.mmat(4, 3) == -1);  // m_{i,i-1} = (-1)^{p(i)}, p(4)=1
  CHECK(cd.mmat(3, 4) == 1);
  CHECK(cd.node_parity(0) == 1);
  CHECK(cd.node_parity(3) == 1);
  CHECK(cd.node_parity(1) == 0);
  CHECK(cd.node_parity(4) == 0);

  CartanData ns(3, 0);
  CHECK(ns.a(1, 1) == 2);
  CHECK(ns.a(0, 2) == -1);
  CHECK(ns.a(2, 0) == -1);
  CHECK(ns.mmat(0, 2) == 1);
  CHECK(ns.mmat(2, 0) == -1);
  CHECK(ns.mmat(0, 1) == -1);
  CHECK(ns.mmat(1, 0) == 1);
  for (int i = 0; i < 3; ++i) CHECK(ns.node_parity(i) == 0);
}

TEST_CASE("psi translation coefficients") {
  CHECK(psi_ci(1, 3) == Rational(1, 2));
  CHECK(psi_ci(4, 3) == Rational(1));  // (4 - 2*1*(4-3))/2
  CHECK(psi_ci(0, 3) == Rational(0));
}

TEST_CASE("operator machinery basics") {
  Algebra alg(Instance{2, 1, 1}, Algebra::Type::GlHat);
  alg.set_ctilde(Scalar::eps());
  auto E11 = std::make_shared<State>(gen_state(alg, Gen{Kind::Current, 1, 1}));
  auto E12 = std::make_shared<State>(gen_state(alg, Gen{Kind::Current, 1, 2}));
  auto E21 = std::make_shared<State>(gen_state(alg, Gen{Kind::Current, 2, 1}));
  ModeMemo memo;

  // Single factor: E12 t^0 acting on E21[-1]|0> = [E12,E21][-1]|0>.
  Op op;
  op.terms.push_back(OpTerm{Scalar(1), false, {{E12, 0, 0}}});
  State v = *E21;
  State got = op_apply(op, v, &memo);
  CHECK(got == nth_product(*E12, 0, v));
  CHECK(!got.is_zero());

  // Scalar term (no factors) acts as multiplication.
  Op sc;
  sc.terms.push_back(OpTerm{Scalar(7), false, {}});
  CHECK(op_apply(sc, v, &memo) == Scalar(7) * v);

  // Summed term sum_{s>=0} E11 t^{-s} E11 t^{s} on a weight-1 state matches
  // the manual truncation (s = 0,1 contribute).
  Op sum;
  sum.terms.push_back(
      OpTerm{Scalar(1), true, {{E11, 0, -1}, {E11, 0, 1}}});
  State want(&alg);
  for (int s = 0; s <= 2; ++s)
    want += nth_product(*E11, -s, nth_product(*E11, s, v));
  CHECK(op_apply(sum, v, &memo) == want);

  // Linearity.
  State u = Scalar(3) * v + gen_state(alg, Gen{Kind::Current, 2, 2});
  CHECK(op_apply(sum, u, &memo) ==
        Scalar(3) * op_apply(sum, v, &memo) +
            op_apply(sum, gen_state(alg, Gen{Kind::Current, 2, 2}), &memo));
}

namespace {

void check_all(const std::vector<YRelation>& rels, const Algebra& alg, int D) {
  for (const auto& r : rels) {
    if (r.degenerate) continue;
    State witness;
    bool ok = relation_holds(r, alg, D, &witness);
    if (!ok)
      MESSAGE(r.id, " ", r.detail, " residual: ", witness.str());
    CHECK(ok);
  }
}

}  // namespace

TEST_CASE("ev relations at (2,1), numeric parameters, D=1") {
  Instance I{2, 1, 1};
  Algebra alg(I, Algebra::Type::GlHat);
  // (eps1, eps2) = (1, 1): hbar = 2, ctilde = (n-m)/2.
  Scalar hbar(2), ctilde(Rational(1 - 2, 2));
  alg.set_ctilde(ctilde);
  ModeMemo memo;
  YangianImages yi = YangianImages::ev(alg, EvOptions{hbar, ctilde, ""});
  Scalar eps = Scalar(-(2 - 1));  // -(m-n) eps2
  check_all(uppercase_relations(yi, hbar, eps, &memo), alg, 1);
}

TEST_CASE("ev relations at (2,1), symbolic parameters, D=1") {
  Instance I{2, 1, 1};
  Algebra alg(I, Algebra::Type::GlHat);
  // eps2 = 1 - eps1: hbar = 1, ctilde = (n-m) eps1, eps = (m-n)(eps1 - 1).
  Scalar hbar(1);
  Scalar ctilde = Scalar(1 - 2) * Scalar::eps();
  alg.set_ctilde(ctilde);
  ModeMemo memo;
  YangianImages yi = YangianImages::ev(alg, EvOptions{hbar, ctilde, ""});
  Scalar eps = Scalar(2 - 1) * (Scalar::eps() - Scalar(1));
  check_all(uppercase_relations(yi, hbar, eps, &memo), alg, 1);
  // Lowercase presentation through the Psi translation.
  check_all(lowercase_relations(yi, Scalar::eps(), Scalar(1) - Scalar::eps(),
                                &memo),
            alg, 1);
}

TEST_CASE("phi relations at (3,0,2), D=1") {
  Instance I{3, 0, 2};
  Algebra alg(I, Algebra::Type::Amn);
  alg.set_c_zero(true);
  auto W = extract_W(alg);
  ModeMemo memo;
  YangianImages yi = YangianImages::phi(alg, W, PhiOptions{});
  // eps1 = alpha/(m-n), eps2 = -1-alpha/(m-n): hbar = -1, eps = (m-n)+alpha.
  Scalar hbar(-1);
  Scalar eps = Scalar(3) + Scalar::alpha();
  check_all(uppercase_relations(yi, hbar, eps, &memo), alg, 1);
  Scalar third(Rational(1, 3));
  Scalar eps1 = third * Scalar::alpha();
  Scalar eps2 = Scalar(-1) - third * Scalar::alpha();
  check_all(lowercase_relations(yi, eps1, eps2, &memo), alg, 1);
}

TEST_CASE("phi mutation breaks a relation") {
  Instance I{3, 0, 2};
  Algebra alg(I, Algebra::Type::Amn);
  alg.set_c_zero(true);
  auto W = extract_W(alg);
  ModeMemo memo;
  PhiOptions opt;
  opt.mutate = "phi-x0p1-alpha";
  YangianImages yi = YangianImages::phi(alg, W, opt);
  Scalar hbar(-1);
  Scalar eps = Scalar(3) + Scalar::alpha();
  bool any_fail = false;
  for (const auto& r : uppercase_relations(yi, hbar, eps, &memo))
    if (!relation_holds(r, alg, 1, nullptr)) {
      any_fail = true;
      break;
    }
  CHECK(any_fail);
}
