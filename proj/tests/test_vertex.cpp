#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "wsa/state.hpp"

using namespace wsa;

namespace {

const Algebra& test_alg() {
  static Algebra alg(Instance{2, 1, 2}, Algebra::Type::Amn);
  return alg;
}

// A diverse pool of generators: even/odd currents on all block positions plus
// ghosts.
std::vector<Gen> pool() {
  return {
      Gen{Kind::Current, 1, 1}, Gen{Kind::Current, 1, 2},
      Gen{Kind::Current, 1, 3}, Gen{Kind::Current, 3, 1},
      Gen{Kind::Current, 3, 3}, Gen{Kind::Current, 4, 1},
      Gen{Kind::Current, 6, 3}, Gen{Kind::Current, 4, 6},
      Gen{Kind::Current, 5, 2}, Gen{Kind::Ghost, 4, 1},
      Gen{Kind::Ghost, 5, 3},   Gen{Kind::Ghost, 6, 2},
  };
}

State from_word(const Algebra& alg, const Word& w) {
  State s(&alg);
  s.add(w, Scalar(1));
  return s;
}

}  // namespace

TEST_CASE("straightening agrees with the rewriting oracle") {
  const Algebra& alg = test_alg();
  auto gens = pool();
  for (auto& a : gens)
    for (auto& b : gens)
      for (int da = 1; da <= 2; ++da)
        for (int db = 1; db <= 2; ++db) {
          std::vector<Letter> raw{Letter{a, da}, Letter{b, db}};
          State got = normal_order(alg, raw, Scalar(1));
          oracle::MElem want = oracle::normalize(
              alg, {{{{a, -da}, {b, -db}}, Scalar(1)}});
          CHECK(oracle::from_state(got) == want);
          // Engine output must already be in oracle normal form.
          CHECK(oracle::normalize(alg, oracle::from_state(got)) ==
                oracle::from_state(got));
        }
  // A sample of length-3 raw words.
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); j += 2)
      for (size_t k = 0; k < gens.size(); k += 3) {
        std::vector<Letter> raw{Letter{gens[i], 1}, Letter{gens[j], 2},
                                Letter{gens[k], 1}};
        State got = normal_order(alg, raw, Scalar(1));
        oracle::MElem want = oracle::normalize(
            alg,
            {{{{gens[i], -1}, {gens[j], -2}, {gens[k], -1}}, Scalar(1)}});
        CHECK(oracle::from_state(got) == want);
      }
}

TEST_CASE("odd ghost square vanishes") {
  const Algebra& alg = test_alg();
  Gen psi{Kind::Ghost, 4, 1};
  CHECK(alg.parity(psi) == 1);
  State s = normal_order(alg, {Letter{psi, 1}, Letter{psi, 1}}, Scalar(1));
  CHECK(s.is_zero());
  // Odd current square also reduces (here to zero, since [x,x] = 0 for
  // off-diagonal odd matrix units with distinct residue pairs).
  Gen x{Kind::Current, 1, 3};
  State s2 = normal_order(alg, {Letter{x, 1}, Letter{x, 1}}, Scalar(1));
  CHECK(oracle::normalize(alg, oracle::from_state(s2)) ==
        oracle::normalize(alg, {{{{x, -1}, {x, -1}}, Scalar(1)}}));
}

TEST_CASE("mode_act examples") {
  const Algebra& alg = test_alg();
  Gen e11{Kind::Current, 1, 1}, e12{Kind::Current, 1, 2},
      e21{Kind::Current, 2, 1}, e22{Kind::Current, 2, 2};
  CHECK(mode_act(e11, 0, vacuum(alg)).is_zero());
  CHECK(mode_act(e11, 3, vacuum(alg)).is_zero());
  // Second-order pole: level term.
  State v = gen_state(alg, e11, 1);
  CHECK(mode_act(e11, 1, v) ==
        (Scalar::alpha() - Scalar::c() + Scalar(1)) * vacuum(alg));
  // First-order pole: bracket.
  CHECK(mode_act(e12, 0, gen_state(alg, e21, 1)) ==
        gen_state(alg, e11, 1) - gen_state(alg, e22, 1));
}

TEST_CASE("mode_act agrees with the oracle on basis words") {
  const Algebra& alg = test_alg();
  auto basis = basis_words(alg, 2);
  auto gens = pool();
  size_t idx = 0;
  for (const auto& w : basis) {
    ++idx;
    if (idx % 5 != 0 && word_weight(w) == 2) continue;  // sample the bulk
    State v = from_word(alg, w);
    for (auto& a : gens)
      for (int n = -2; n <= 2; ++n) {
        State got = mode_act(a, n, v);
        oracle::MElem want =
            oracle::apply_mode(alg, a, n, oracle::from_state(v));
        CHECK(oracle::from_state(got) == want);
      }
  }
}

TEST_CASE("nth_product matches the classical two-factor expansion") {
  const Algebra& alg = test_alg();
  auto gens = pool();
  auto basis = basis_words(alg, 2);
  std::vector<Word> vs;
  for (size_t i = 0; i < basis.size(); i += 17) vs.push_back(basis[i]);
  vs.push_back(Word{});
  for (size_t ia = 0; ia < gens.size(); ia += 2)
    for (size_t ib = 1; ib < gens.size(); ib += 3) {
      Gen a = gens[ia], b = gens[ib];
      State u = normal_order(alg, {Letter{a, 1}, Letter{b, 1}}, Scalar(1));
      int pq = (alg.parity(a) && alg.parity(b)) ? -1 : 1;
      for (const auto& wv : vs)
        for (int n = -3; n <= 2; ++n) {
          State v = from_word(alg, wv);
          // (a_{(-1)}b)_{(n)} = sum_{k<=-1} a[k] b[n-1-k] + (-1)^{pq} sum_{k>=0} b[n-1-k] a[k]
          State want(&alg);
          for (int k = -1; k >= n - v.weight() - 2; --k)
            want += mode_act(a, k, mode_act(b, n - 1 - k, v));
          for (int k = 0; k <= v.weight(); ++k) {
            State t = mode_act(b, n - 1 - k, mode_act(a, k, v));
            want += Scalar(pq) * t;
          }
          CHECK(nth_product(u, n, v) == want);
        }
    }
}

TEST_CASE("nth_product basics") {
  const Algebra& alg = test_alg();
  Gen a{Kind::Current, 1, 2}, b{Kind::Current, 2, 1};
  State ua = gen_state(alg, a, 1), ub = gen_state(alg, b, 1);
  // Weight bound.
  CHECK(nth_product(ua, 2, ub).is_zero());
  CHECK(nth_product(ua, 5, ub).is_zero());
  // (J^a[-1])_{(1)}(J^b[-1]) = kappa(a,b)|0>.
  CHECK(nth_product(ua, 1, ub) == alg.kappa(a, b) * vacuum(alg));
  // Vacuum identities.
  CHECK(nth_product(vacuum(alg), -1, ua) == ua);
  CHECK(nth_product(vacuum(alg), 0, ua).is_zero());
  CHECK(nth_product(ua, -1, vacuum(alg)) == ua);
  CHECK(nth_product(ua, -2, vacuum(alg)) == gen_state(alg, a, 2));
}

TEST_CASE("translate") {
  const Algebra& alg = test_alg();
  Gen a{Kind::Current, 1, 2}, b{Kind::Current, 2, 1};
  CHECK(translate(vacuum(alg)).is_zero());
  CHECK(translate(gen_state(alg, a, 1)) == gen_state(alg, a, 2));
  State prod = normal_order(alg, {Letter{a, 1}, Letter{b, 1}}, Scalar(1));
  State want = normal_order(alg, {Letter{a, 2}, Letter{b, 1}}, Scalar(1)) +
               normal_order(alg, {Letter{a, 1}, Letter{b, 2}}, Scalar(1));
  CHECK(translate(prod) == want);
  // [d, x[-s]] = s x[-s-1] as operators, on sampled basis words.
  auto basis = basis_words(alg, 2);
  for (size_t i = 0; i < basis.size(); i += 11) {
    State v = from_word(alg, basis[i]);
    for (auto& g : pool()) {
      for (int s = 1; s <= 2; ++s) {
        State lhs = translate(prepend(Letter{g, s}, v));
        State rhs = Scalar(s) * prepend(Letter{g, s + 1}, v) +
                    prepend(Letter{g, s}, translate(v));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("mode_commutator") {
  const Algebra& alg = test_alg();
  Gen a{Kind::Current, 1, 2}, b{Kind::Current, 2, 1};
  State ua = gen_state(alg, a, 1), ub = gen_state(alg, b, 1);
  // [u t^0, v t^0] -> only the r = 0 term.
  auto c0 = mode_commutator(ua, 0, ub, 0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].second == 0);
  CHECK(c0[0].first == nth_product(ua, 0, ub));
  // [u t^1, v t^-1] -> bracket at t^0 plus central kappa term at t^-1.
  auto c1 = mode_commutator(ua, 1, ub, -1);
  REQUIRE(c1.size() == 2);
  CHECK(c1[0].first == nth_product(ua, 0, ub));
  CHECK(c1[0].second == 0);
  CHECK(c1[1].first == alg.kappa(a, b) * vacuum(alg));
  CHECK(c1[1].second == -1);
}

TEST_CASE("weight and parity additivity") {
  const Algebra& alg = test_alg();
  auto gens = pool();
  for (size_t i = 0; i < gens.size(); i += 2)
    for (size_t j = 1; j < gens.size(); j += 3) {
      State u = normal_order(alg, {Letter{gens[i], 1}, Letter{gens[j], 2}},
                             Scalar(1));
      State v = gen_state(alg, gens[(i + j) % gens.size()], 1);
      for (int n = -2; n <= 2; ++n) {
        State r = nth_product(u, n, v);
        if (r.is_zero()) continue;
        for (const auto& [w, c] : r.terms())
          CHECK(word_weight(w) == u.weight() + v.weight() - n - 1);
        CHECK(r.parity() == ((u.parity() + v.parity()) % 2));
      }
    }
}
