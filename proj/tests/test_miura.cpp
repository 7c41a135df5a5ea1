#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wsa/miura.hpp"

using namespace wsa;

TEST_CASE("principal instance (1,0,2): explicit generators") {
  Algebra alg(Instance{1, 0, 2}, Algebra::Type::Amn);
  auto W = extract_W(alg);
  Gen e11{Kind::Current, 1, 1}, e21{Kind::Current, 2, 1},
      e22{Kind::Current, 2, 2};
  // W^(1) = e11[-1] + e22[-1]
  State w1 = gen_state(alg, e11, 1) + gen_state(alg, e22, 1);
  CHECK(W.at(w_key(1, 1, 1)) == w1);
  // W^(2) = e21[-1] + alpha e22[-2] + e11[-1] e22[-1]
  State w2 = gen_state(alg, e21, 1) + Scalar::alpha() * gen_state(alg, e22, 2) +
             normal_order(alg, {Letter{e11, 1}, Letter{e22, 1}}, Scalar(1));
  CHECK(W.at(w_key(2, 1, 1)) == w2);
  CHECK(W1_closed(alg, 1, 1) == w1);
  CHECK(W2_closed(alg, 1, 1) == w2);
}

TEST_CASE("cdet extraction matches closed forms at (2,1,2)") {
  Algebra alg(Instance{2, 1, 2}, Algebra::Type::Amn);
  auto W = extract_W(alg);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      CHECK(W.at(w_key(1, i, j)) == W1_closed(alg, i, j));
      CHECK(W.at(w_key(2, i, j)) == W2_closed(alg, i, j));
    }
}

TEST_CASE("cdet extraction matches closed forms at (1,1,3)") {
  Algebra alg(Instance{1, 1, 3}, Algebra::Type::Amn);
  auto W = extract_W(alg);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      CHECK(W.at(w_key(1, i, j)) == W1_closed(alg, i, j));
      CHECK(W.at(w_key(2, i, j)) == W2_closed(alg, i, j));
    }
}

TEST_CASE("d0 on single generators: explicit principal values") {
  Algebra alg(Instance{1, 0, 2}, Algebra::Type::Amn);
  Gen e11{Kind::Current, 1, 1}, e21{Kind::Current, 2, 1},
      e22{Kind::Current, 2, 2};
  Gen psi21{Kind::Ghost, 2, 1};
  // d0(e11[-1]) = psi21[-1], d0(e22[-1]) = -psi21[-1]
  CHECK(d0_gen_image(alg, e11) == gen_state(alg, psi21, 1));
  CHECK(d0_gen_image(alg, e22) == Scalar(-1) * gen_state(alg, psi21, 1));
  // d0(e21[-1]) = e11[-1]psi21[-1] - e22[-1]psi21[-1] + (1+alpha) psi21[-2]
  State want =
      normal_order(alg, {Letter{e11, 1}, Letter{psi21, 1}}, Scalar(1)) -
      normal_order(alg, {Letter{e22, 1}, Letter{psi21, 1}}, Scalar(1)) +
      (Scalar(1) + Scalar::alpha()) * gen_state(alg, psi21, 2);
  CHECK(d0_gen_image(alg, e21) == want);
}

TEST_CASE("d0 is odd and squares to zero on generators") {
  Algebra alg(Instance{2, 1, 2}, Algebra::Type::Amn);
  for (const auto& g : alg.generators()) {
    if (g.kind == Kind::Ghost) continue;
    State im = d0_gen_image(alg, g);
    if (im.is_zero()) continue;
    CHECK(im.parity() == (alg.parity(g) ^ 1));
    CHECK(d0_apply(im).is_zero());
  }
}

TEST_CASE("W generators lie in the kernel of d0") {
  for (Instance I : {Instance{1, 0, 2}, Instance{2, 1, 2}, Instance{1, 1, 3}}) {
    Algebra alg(I, Algebra::Type::Amn);
    auto W = extract_W(alg);
    for (const auto& [key, st] : W) CHECK(d0_apply(st).is_zero());
  }
}

TEST_CASE("mutations are visible") {
  Algebra alg(Instance{1, 0, 2}, Algebra::Type::Amn);
  // The corrupted depth-2 coefficient differs from the true W^(2) by a
  // multiple of dW^(1), which still lies in ker d0 -- so the generator suite
  // must catch it by comparison against the column-determinant extraction.
  State w2m = W2_closed(alg, 1, 1, "gen-w2-depth2-coeff");
  auto W = extract_W(alg);
  CHECK_FALSE(W.at(w_key(2, 1, 1)) == w2m);
  CHECK(d0_apply(w2m).is_zero());
  // The corrupted differential no longer annihilates the true generators.
  State w2 = W2_closed(alg, 1, 1);
  CHECK_FALSE(d0_apply(w2, "d0-drop-ghost-shift").is_zero());
}
