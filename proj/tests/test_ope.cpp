#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wsa/miura.hpp"
#include "wsa/suites.hpp"

using namespace wsa;

namespace {

void expect_all_pass(const SuiteReport& rep) {
  int failed = 0;
  for (const auto& c : rep.checks) {
    if (c.status == "fail") {
      ++failed;
      MESSAGE(c.id, " residual: ", c.residual);
    }
    CHECK(c.status != "fail");
  }
  CHECK(failed == 0);
  CHECK(!rep.checks.empty());
}

}  // namespace

TEST_CASE("explicit zeroth-product values at (2,1,2)") {
  Algebra alg(Instance{2, 1, 2}, Algebra::Type::Amn);
  auto W = extract_W(alg);
  auto W1 = [&](int i, int j) { return W.at(w_key(1, i, j)); };
  auto W2 = [&](int i, int j) { return W.at(w_key(2, i, j)); };

  // u=v=i=j=1: the two delta terms cancel.
  CHECK(nth_product(W1(1, 1), 0, W2(1, 1)).is_zero());
  // u=1, v=2, i=3, j=1: only the first delta survives.
  CHECK(nth_product(W1(1, 2), 0, W2(3, 1)) == W2(3, 2));
  // Disjoint indices: both deltas vanish.
  CHECK(nth_product(W1(1, 1), 0, W2(2, 3)).is_zero());
  // Odd sign case: u=3, v=1 against i=1, j=3 -- the second delta fires with
  // the super sign (-1)^{p(e_{3,1})p(e_{1,3})} = -1.
  CHECK(nth_product(W1(3, 1), 0, W2(1, 3)) == W2(3, 3) + W2(1, 1));
}

TEST_CASE("explicit higher-product values at (2,1,2)") {
  Algebra alg(Instance{2, 1, 2}, Algebra::Type::Amn);
  auto W = extract_W(alg);
  auto W1 = [&](int i, int j) { return W.at(w_key(1, i, j)); };
  auto W2 = [&](int i, int j) { return W.at(w_key(2, i, j)); };
  int l = 2;
  Scalar a = Scalar::alpha(), c = Scalar::c();

  // (W1_{1,1})_(1) W2_{1,1} = (l-1) alpha W1_{1,1} - (l-1)(lc-1) W1_{1,1}.
  State want = Scalar(l - 1) * a * W1(1, 1) -
               Scalar(l - 1) * (Scalar(l) * c - Scalar(1)) * W1(1, 1);
  CHECK(nth_product(W1(1, 1), 1, W2(1, 1)) == want);

  // The s >= 3 products vanish.
  CHECK(nth_product(W1(1, 2), 3, W2(2, 1)).is_zero());
  CHECK(nth_product(W1(1, 1), 5, W2(1, 1)).is_zero());

  // (2)-product on a diagonal pair with vanishing pairing.
  CHECK(nth_product(W1(1, 2), 2, W2(1, 2)).is_zero());
  // (2)-product l(l-1) alpha kappa: off-diagonal matched pair gives
  // l(l-1) alpha^2 |0>.
  CHECK(nth_product(W1(1, 2), 2, W2(2, 1)) ==
        Scalar(l * (l - 1)) * a * a * vacuum(alg));
}

TEST_CASE("xi map level value at (2,1,2)") {
  Algebra alg(Instance{2, 1, 2}, Algebra::Type::Amn);
  auto W = extract_W(alg);
  int l = 2;
  // (W1_{1,1})_(1) W1_{1,1} = l alpha - l(lc-1) on the vacuum.
  State got = nth_product(W.at(w_key(1, 1, 1)), 1, W.at(w_key(1, 1, 1)));
  Scalar want = Scalar(l) * Scalar::alpha() -
                Scalar(l) * (Scalar(l) * Scalar::c() - Scalar(1));
  CHECK(got == want * vacuum(alg));
  // Odd diagonal: (W1_{3,3})_(1) W1_{3,3} picks up (-1)^{p(3)} on the alpha
  // term while the central term stays even (p(3)+p(3) = 0).
  State got3 = nth_product(W.at(w_key(1, 3, 3)), 1, W.at(w_key(1, 3, 3)));
  Scalar want3 = Scalar(-l) * Scalar::alpha() -
                 Scalar(l) * (Scalar(l) * Scalar::c() - Scalar(1));
  CHECK(got3 == want3 * vacuum(alg));
}

TEST_CASE("section-4 suite is exhaustive and exact at (2,1,2)") {
  SuiteConfig cfg;
  cfg.inst = Instance{2, 1, 2};
  cfg.jobs = 8;
  SuiteReport rep = run_suite("ope", cfg);
  expect_all_pass(rep);
  // 4 identities x N^4 tuples + 25 commutator grids + diagonal products.
  CHECK(rep.checks.size() >= 2000);
}

TEST_CASE("section-4 suite is exhaustive and exact at (3,0,2)") {
  SuiteConfig cfg;
  cfg.inst = Instance{3, 0, 2};
  cfg.jobs = 8;
  expect_all_pass(run_suite("ope", cfg));
}

TEST_CASE("c-coefficient mutation is caught") {
  SuiteConfig cfg;
  cfg.inst = Instance{2, 1, 2};
  cfg.jobs = 8;
  cfg.mutate = "ope-lem4-c-coeff";
  SuiteReport rep = run_suite("ope", cfg);
  int failed = 0;
  for (const auto& c : rep.checks)
    if (c.status == "fail") ++failed;
  CHECK(failed > 0);
}

TEST_CASE("ope suite rejects l = 1") {
  SuiteConfig cfg;
  cfg.inst = Instance{2, 1, 1};
  CHECK_THROWS_AS(run_suite("ope", cfg), ConfigError);
}
