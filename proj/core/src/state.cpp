#include "wsa/state.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wsa {

int word_parity(const Algebra& alg, const Word& w) {
  int p = 0;
  for (const auto& L : w) p ^= alg.parity(L.gen);
  return p;
}

int State::parity() const {
  if (terms_.empty() || !alg_) return 0;
  return word_parity(*alg_, terms_.begin()->first);
}

std::string State::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << "  +  ";
    first = false;
    os << "(" << c.str() << ")";
    for (const auto& L : w) {
      os << (L.gen.kind == Kind::Current ? " J" : " psi") << "(" << L.gen.row
         << "," << L.gen.col << ")[-" << L.depth << "]";
    }
    if (w.empty()) os << " |0>";
  }
  return os.str();
}

State vacuum(const Algebra& alg) {
  State s(&alg);
  s.add(Word{}, Scalar(1));
  return s;
}

State gen_state(const Algebra& alg, const Gen& g, int depth) {
  if (!alg.valid(g) || depth < 1) throw std::invalid_argument("gen_state");
  State s(&alg);
  s.add(Word{Letter{g, depth}}, Scalar(1));
  return s;
}

namespace {

// Straighten a[-s] * (coeff * w) into canonical order, recursively.
void prepend_word(const Algebra& alg, const Letter& a, const Word& w,
                  const Scalar& coeff, State& out) {
  if (w.empty() || letter_before(a, w.front())) {
    Word r;
    r.reserve(w.size() + 1);
    r.push_back(a);
    r.insert(r.end(), w.begin(), w.end());
    out.add(r, coeff);
    return;
  }
  Word rest(w.begin() + 1, w.end());
  const Letter& b = w.front();
  if (a == b) {
    if (alg.parity(a.gen) == 0) {
      Word r;
      r.reserve(w.size() + 1);
      r.push_back(a);
      r.insert(r.end(), w.begin(), w.end());
      out.add(r, coeff);
      return;
    }
    // Odd square: x[-s] x[-s] = (1/2) [x, x][-2s].
    Scalar half = coeff.div(2);
    for (const auto& [c, g] : alg.bracket(a.gen, a.gen))
      prepend_word(alg, Letter{g, 2 * a.depth}, rest, Scalar(c) * half, out);
    return;
  }
  // Swap: a[-s] b[-t] = (-1)^{pq} b[-t] a[-s] + [a, b][-s-t]; the modes never
  // sum to zero here, so no central contribution arises.
  int sgn = (alg.parity(a.gen) && alg.parity(b.gen)) ? -1 : 1;
  State inner(&alg);
  prepend_word(alg, a, rest, sgn == 1 ? coeff : -coeff, inner);
  for (const auto& [wi, ci] : inner.terms()) prepend_word(alg, b, wi, ci, out);
  for (const auto& [c, g] : alg.bracket(a.gen, b.gen))
    prepend_word(alg, Letter{g, a.depth + b.depth}, rest, Scalar(c) * coeff, out);
}

}  // namespace

State prepend(const Letter& a, const State& v) {
  const Algebra* alg = v.alg();
  if (!alg) throw std::invalid_argument("prepend: state without algebra");
  State out(alg);
  for (const auto& [w, c] : v.terms()) prepend_word(*alg, a, w, c, out);
  return out;
}

State normal_order(const Algebra& alg, const std::vector<Letter>& raw,
                   const Scalar& coeff) {
  State s = vacuum(alg);
  for (auto it = raw.rbegin(); it != raw.rend(); ++it) s = prepend(*it, s);
  return coeff * s;
}

State mode_act(const Gen& a, int nmode, const State& v) {
  const Algebra* alg = v.alg();
  if (!alg) throw std::invalid_argument("mode_act: state without algebra");
  if (nmode < 0) return prepend(Letter{a, -nmode}, v);
  State out(alg);
  int pa = alg->parity(a);
  for (const auto& [w, c] : v.terms()) {
    if (w.empty()) continue;  // a[n] |0> = 0 for n >= 0
    const Letter& b = w.front();
    State rest(alg);
    rest.add(Word(w.begin() + 1, w.end()), c);
    // a[n] b[-t] r = (-1)^{pq} b[-t] (a[n] r) + [a,b][n-t] r + d_{n,t} n kappa(a,b) r
    int sgn = (pa && alg->parity(b.gen)) ? -1 : 1;
    State inner = mode_act(a, nmode, rest);
    if (sgn == -1) inner = Scalar(-1) * inner;
    out += prepend(b, inner);
    for (const auto& [cb, g] : alg->bracket(a, b.gen))
      out += Scalar(cb) * mode_act(g, nmode - b.depth, rest);
    if (nmode == b.depth && nmode != 0)
      out += (Scalar(nmode) * alg->kappa(a, b.gen)) * rest;
  }
  return out;
}

namespace {

State word_nth(const Algebra& alg, const Word& u, const Scalar& cu, int n,
               const State& v) {
  if (u.empty()) {
    // |0>_(n) v = d_{n,-1} v.
    return n == -1 ? cu * v : State(&alg);
  }
  State out(&alg);
  if (n >= word_weight(u) + v.weight()) return out;
  const Letter a = u.front();
  Word w(u.begin() + 1, u.end());
  int s = a.depth;
  int pa = alg.parity(a.gen);
  int pw = word_parity(alg, w);
  int cross = (pa && pw) ? -1 : 1;
  if (s % 2 != 0) cross = -cross;  // the (-1)^s factor
  // (a_{(-s)} w)_{(n)} v =
  //   sum_j C(s+j-1, j) [ a[-s-j] (w_{(n+j)} v)
  //                       - (-1)^{p(a)p(w)} (-1)^s w_{(n-s-j)} (a[j] v) ]
  int jmax1 = word_weight(w) + v.weight() - 1 - n;
  for (int j = 0; j <= jmax1; ++j) {
    State inner = word_nth(alg, w, cu, n + j, v);
    if (inner.is_zero()) continue;
    out += Scalar(binomial(s + j - 1, j)) * prepend(Letter{a.gen, s + j}, inner);
  }
  int jmax2 = v.weight();
  for (int j = 0; j <= jmax2; ++j) {
    State av = mode_act(a.gen, j, v);
    if (av.is_zero()) continue;
    State term = word_nth(alg, w, cu, n - s - j, av);
    if (term.is_zero()) continue;
    out -= (Scalar(cross) * Scalar(binomial(s + j - 1, j))) * term;
  }
  return out;
}

}  // namespace

State nth_product(const State& u, int n, const State& v) {
  const Algebra* alg = u.alg() ? u.alg() : v.alg();
  if (!alg) throw std::invalid_argument("nth_product: state without algebra");
  State out(alg);
  for (const auto& [w, c] : u.terms()) out += word_nth(*alg, w, c, n, v);
  return out;
}

State translate(const State& u) {
  const Algebra* alg = u.alg();
  if (!alg) return u;
  State out(alg);
  for (const auto& [w, c] : u.terms()) {
    for (size_t i = 0; i < w.size(); ++i) {
      std::vector<Letter> raw = w;
      Scalar coeff = Scalar(raw[i].depth) * c;
      raw[i].depth += 1;
      out += normal_order(*alg, raw, coeff);
    }
  }
  return out;
}

State translate_pow(const State& u, int k) {
  State s = u;
  for (int i = 0; i < k; ++i) s = translate(s);
  return s;
}

std::vector<std::pair<State, int>> mode_commutator(const State& u, int a,
                                                   const State& v, int b) {
  std::vector<std::pair<State, int>> out;
  int rmax = u.weight() + v.weight() - 1;
  for (int r = 0; r <= rmax; ++r) {
    Rational br = binomial(a, r);
    if (br == 0) continue;
    State t = nth_product(u, r, v);
    if (t.is_zero()) continue;
    out.emplace_back(Scalar(br) * t, a + b - r);
  }
  return out;
}

namespace {

void enum_words(const std::vector<Letter>& letters,
                const std::vector<int>& odd, size_t start, int remaining,
                Word& cur, std::vector<Word>& out) {
  out.push_back(cur);
  for (size_t i = start; i < letters.size(); ++i) {
    if (letters[i].depth > remaining) continue;
    if (odd[i] && !cur.empty() && cur.back() == letters[i]) continue;
    cur.push_back(letters[i]);
    enum_words(letters, odd, i, remaining - letters[i].depth, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> basis_words(const Algebra& alg, int D) {
  std::vector<Letter> letters;
  for (int d = D; d >= 1; --d)
    for (const auto& g : alg.generators()) letters.push_back(Letter{g, d});
  std::sort(letters.begin(), letters.end(),
            [](const Letter& a, const Letter& b) { return letter_before(a, b); });
  std::vector<int> odd(letters.size());
  for (size_t i = 0; i < letters.size(); ++i) odd[i] = alg.parity(letters[i].gen);
  std::vector<Word> out;
  Word cur;
  enum_words(letters, odd, 0, D, cur, out);
  return out;
}

}  // namespace wsa
