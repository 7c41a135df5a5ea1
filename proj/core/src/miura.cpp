#include "wsa/miura.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace wsa {

std::string w_key(int r, int i, int j) {
  std::ostringstream os;
  os << r << "," << i << "," << j;
  return os.str();
}

TauPoly tau_mult(const TauPoly& x, const TauPoly& y) {
  TauPoly out;
  for (const auto& [k, xs] : x) {
    for (const auto& [j, ys] : y) {
      State shifted = ys;
      for (int d = 0; d <= k; ++d) {
        State term = Scalar(binomial(k, d)) * nth_product(xs, -1, shifted);
        if (!term.is_zero()) {
          State& slot = out[k + j - d];
          if (!slot.alg()) slot = State(term.alg());
          slot += term;
        }
        if (d < k) shifted = translate(shifted);
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

MEntry mentry_mult(const Algebra& alg, const MEntry& x, const MEntry& y) {
  const Instance& I = alg.inst();
  int N = I.N();
  MEntry out;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      TauPoly acc;
      // Homomorphism rule: (i,j) component of a product is
      //   sum_r (-1)^{p(e_{i,r})p(e_{j,r})} X_{r,j} Y_{i,r}.
      for (int r = 1; r <= N; ++r) {
        auto xi = x.find({r, j});
        auto yi = y.find({i, r});
        if (xi == x.end() || yi == y.end()) continue;
        int sgn = (I.pe(i, r) && I.pe(j, r)) ? -1 : 1;
        TauPoly p = tau_mult(xi->second, yi->second);
        for (auto& [k, st] : p) {
          State& slot = acc[k];
          if (!slot.alg()) slot = State(st.alg());
          if (sgn == 1) slot += st;
          else slot -= st;
        }
      }
      for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
      if (!acc.empty()) out.emplace(std::make_pair(i, j), std::move(acc));
    }
  return out;
}

namespace {

// Component matrix of one entry of the Miura matrix B, already pushed through
// the component map: the (a, b) component of a current e_{s,u}[-1] over gl(l)
// is (-1)^{p(a)} e_{(s-1)N+a,(u-1)N+b}[-1], and scalars / tau land on the
// diagonal with the same sign.
MEntry miura_entry(const Algebra& alg, int s, int u) {
  const Instance& I = alg.inst();
  int N = I.N();
  MEntry out;
  if (u > s + 1) return out;
  for (int a = 1; a <= N; ++a) {
    // Scalars and tau sit on the diagonal with no parity sign; only currents
    // pick up (-1)^{p(row residue)}.
    Scalar sign = I.p(a) ? Scalar(-1) : Scalar(1);
    if (u == s + 1) {
      TauPoly p;
      p[0] = Scalar(-1) * vacuum(alg);
      out.emplace(std::make_pair(a, a), std::move(p));
      continue;
    }
    for (int b = 1; b <= N; ++b) {
      TauPoly p;
      Gen g{Kind::Current, I.flat(s - 1, a), I.flat(u - 1, b)};
      if (alg.valid(g)) {
        State st = sign * gen_state(alg, g, 1);
        p[0] = st;
      }
      if (s == u && a == b) {
        State& slot = p[1];
        if (!slot.alg()) slot = State(&alg);
        slot += Scalar::alpha() * vacuum(alg);
      }
      if (!p.empty()) out.emplace(std::make_pair(a, b), std::move(p));
    }
  }
  return out;
}

}  // namespace

MEntry miura_cdet(const Algebra& alg) {
  int l = alg.inst().l;
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 1);
  MEntry total;
  do {
    bool nonzero = true;
    int sgn = 1;
    for (int k = 1; k <= l && nonzero; ++k) {
      if (perm[k - 1] < k - 1) nonzero = false;  // zero above the superdiagonal
      for (int k2 = k + 1; k2 <= l; ++k2)
        if (perm[k - 1] > perm[k2 - 1]) sgn = -sgn;
    }
    if (!nonzero) continue;
    MEntry prod = miura_entry(alg, perm[l - 1], l);
    for (int k = l - 1; k >= 1; --k)
      prod = mentry_mult(alg, miura_entry(alg, perm[k - 1], k), prod);
    for (auto& [key, poly] : prod)
      for (auto& [pw, st] : poly) {
        TauPoly& slot = total[key];
        State& sslot = slot[pw];
        if (!sslot.alg()) sslot = State(st.alg());
        if (sgn == 1) sslot += st;
        else sslot -= st;
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto it = total.begin(); it != total.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = jt->second.is_zero() ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? total.erase(it) : std::next(it);
  }
  return total;
}

std::map<std::string, State> extract_W(const Algebra& alg) {
  const Instance& I = alg.inst();
  int N = I.N(), l = I.l;
  MEntry C = miura_cdet(alg);
  std::map<std::string, State> out;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      auto ci = C.find({j, i});
      for (int r = 0; r <= l; ++r) {
        State coeff(&alg);
        if (ci != C.end()) {
          auto pi = ci->second.find(l - r);
          if (pi != ci->second.end()) coeff = pi->second;
        }
        State w(&alg);
        for (const auto& [word, sc] : coeff.terms()) {
          Scalar q;
          if (!sc.divide_alpha_power(l - r, &q))
            throw std::runtime_error("alpha divisibility failed at " +
                                     w_key(r, i, j));
          if (I.p(j)) q = -q;
          w.add(word, q);
        }
        if (r == 0) {
          State expect(&alg);
          if (i == j) expect = vacuum(alg);
          if (i == j && I.p(j)) expect = Scalar(-1) * expect;
          if (!(w == expect))
            throw std::runtime_error("W^(0) mismatch at " + w_key(0, i, j));
          continue;
        }
        out.emplace(w_key(r, i, j), std::move(w));
      }
    }
  return out;
}

State W1_closed(const Algebra& alg, int i, int j) {
  const Instance& I = alg.inst();
  State out(&alg);
  for (int s = 1; s <= I.l; ++s) {
    Gen g{Kind::Current, I.flat(s - 1, j), I.flat(s - 1, i)};
    out += gen_state(alg, g, 1);
  }
  return out;
}

State W2_closed(const Algebra& alg, int i, int j, const std::string& mutate) {
  const Instance& I = alg.inst();
  int N = I.N(), l = I.l;
  bool mut = mutate == "gen-w2-depth2-coeff";
  State out(&alg);
  for (int s = 1; s <= l - 1; ++s) {
    Gen g{Kind::Current, I.flat(s, j), I.flat(s - 1, i)};
    out += gen_state(alg, g, 1);
  }
  for (int s = 1; s <= l; ++s) {
    Gen g{Kind::Current, I.flat(s - 1, j), I.flat(s - 1, i)};
    long coeff = mut ? s : s - 1;
    if (coeff != 0)
      out += (Scalar(coeff) * Scalar::alpha()) * gen_state(alg, g, 2);
  }
  for (int r1 = 1; r1 <= l; ++r1)
    for (int r2 = r1 + 1; r2 <= l; ++r2)
      for (int t = 1; t <= N; ++t) {
        int sgn = (I.p(t) + I.pe(i, t) * I.pe(j, t)) % 2 ? -1 : 1;
        Gen g1{Kind::Current, I.flat(r1 - 1, t), I.flat(r1 - 1, i)};
        Gen g2{Kind::Current, I.flat(r2 - 1, j), I.flat(r2 - 1, t)};
        out += Scalar(sgn) *
               normal_order(alg, {Letter{g1, 1}, Letter{g2, 1}}, Scalar(1));
      }
  return out;
}

State d0_gen_image(const Algebra& alg, const Gen& g, const std::string& mutate) {
  State out(&alg);
  if (g.kind == Kind::Ghost) return out;
  const Instance& I = alg.inst();
  int N = I.N();
  int s = I.block_of(g.row) + 1, j = I.res_of(g.row);
  int t = I.block_of(g.col) + 1, i = I.res_of(g.col);
  bool mut = mutate == "d0-drop-ghost-shift";
  auto add_word = [&](const std::vector<Letter>& raw, const Scalar& c) {
    for (const auto& L : raw)
      if (!alg.valid(L.gen)) return;
    out += normal_order(alg, raw, c);
  };
  for (int a = t; a <= s; ++a)
    for (int r = 1; r <= N; ++r) {
      int s1 = (I.pe(i, j) + I.pe(i, r) * I.pe(r, j)) % 2 ? -1 : 1;
      int s2 = I.pe(i, r) * I.pe(r, j) ? -1 : 1;
      Gen e_ar{Kind::Current, I.flat(a - 1, r), I.flat(t - 1, i)};
      Gen psi_ja{Kind::Ghost, I.flat(s - 1, j), I.flat(a - 1, r)};
      add_word({Letter{e_ar, 1}, Letter{psi_ja, 1}}, Scalar(s1));
      Gen psi_ar{Kind::Ghost, I.flat(a - 1, r), I.flat(t - 1, i)};
      Gen e_ja{Kind::Current, I.flat(s - 1, j), I.flat(a - 1, r)};
      add_word({Letter{psi_ar, 1}, Letter{e_ja, 1}}, Scalar(-s2));
    }
  Scalar pj = I.p(j) ? Scalar(-1) : Scalar(1);
  if (t < s) {
    Gen psi{Kind::Ghost, I.flat(s - 1, j), I.flat(t - 1, i)};
    add_word({Letter{psi, 2}}, pj * Scalar::alpha());
  }
  {
    int row = s * N + j;  // block s (0-based), one copy below
    if (row <= I.dim()) {
      Gen psi{Kind::Ghost, row, I.flat(t - 1, i)};
      add_word({Letter{psi, 1}}, pj);
    }
  }
  if (t >= 2) {
    Gen psi{Kind::Ghost, I.flat(s - 1, j), I.flat(t - 2, i)};
    add_word({Letter{psi, 1}}, mut ? pj : -pj);
  }
  return out;
}

State d0_apply(const State& v, const std::string& mutate) {
  const Algebra* alg = v.alg();
  if (!alg) return v;
  // d0(a[-s] w) = (d0 a[-1]|0>)_(-s) w + (-1)^{p(a)} a[-s] d0(w), recursively.
  std::function<State(const Word&)> go = [&](const Word& w) -> State {
    State out(alg);
    if (w.empty()) return out;
    Letter a = w.front();
    State rest(alg);
    rest.add(Word(w.begin() + 1, w.end()), Scalar(1));
    State da = d0_gen_image(*alg, a.gen, mutate);
    out += nth_product(da, -a.depth, rest);
    State inner = go(Word(w.begin() + 1, w.end()));
    if (!inner.is_zero()) {
      if (alg->parity(a.gen)) inner = Scalar(-1) * inner;
      out += prepend(a, inner);
    }
    return out;
  };
  State out(alg);
  for (const auto& [w, c] : v.terms()) out += c * go(w);
  return out;
}

}  // namespace wsa
