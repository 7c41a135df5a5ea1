#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "wsa/algebra.hpp"
#include "wsa/scalar.hpp"

namespace wsa {

// A creation mode u[-depth] of a single generator (depth >= 1).
struct Letter {
  Gen gen;
  int depth = 1;

  auto operator<=>(const Letter&) const = default;
};

// Canonical letter order: depth descending, then Current before Ghost, then
// (row, col) lexicographic.  Deterministic normal forms depend on this.
inline bool letter_before(const Letter& a, const Letter& b) {
  if (a.depth != b.depth) return a.depth > b.depth;
  if (a.gen.kind != b.gen.kind) return a.gen.kind < b.gen.kind;
  if (a.gen.row != b.gen.row) return a.gen.row < b.gen.row;
  return a.gen.col < b.gen.col;
}

using Word = std::vector<Letter>;

inline int word_weight(const Word& w) {
  int s = 0;
  for (const auto& L : w) s += L.depth;
  return s;
}

// An element of the vertex algebra: a Scalar-linear combination of normally
// ordered words acting on the vacuum.  The empty word is |0>.
class State {
 public:
  State() = default;
  explicit State(const Algebra* alg) : alg_(alg) {}

  const Algebra* alg() const { return alg_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  State& operator+=(const State& o) {
    if (!alg_) alg_ = o.alg_;
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  State& operator-=(const State& o) {
    if (!alg_) alg_ = o.alg_;
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(const Scalar& s, const State& v) {
    State r(v.alg_);
    for (const auto& [w, c] : v.terms_) r.add(w, s * c);
    return r;
  }
  bool operator==(const State& o) const { return terms_ == o.terms_; }

  // Maximal word weight (0 for the zero state and for multiples of |0>).
  int weight() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, word_weight(w));
    return m;
  }

  // Parity of the first nonzero term (states in use are homogeneous).
  int parity() const;

  // Map c -> 0 in every coefficient.
  State specialize_c0() const {
    State r(alg_);
    for (const auto& [w, c] : terms_) r.add(w, c.specialize_c0());
    return r;
  }

  std::string str() const;

 private:
  std::map<Word, Scalar> terms_;
  const Algebra* alg_ = nullptr;
};

int word_parity(const Algebra& alg, const Word& w);

// |0> and single-generator states.
State vacuum(const Algebra& alg);
State gen_state(const Algebra& alg, const Gen& g, int depth = 1);

// Multiply a creation mode onto the front of a state and straighten into
// canonical PBW order.
State prepend(const Letter& a, const State& v);

// Straighten an arbitrary creation-mode sequence applied to |0>.
State normal_order(const Algebra& alg, const std::vector<Letter>& raw,
                   const Scalar& coeff = Scalar(1));

// Action of the mode a[nmode] (any integer) on v.
State mode_act(const Gen& a, int nmode, const State& v);

// The n-th product u_(n) v, for every integer n.
State nth_product(const State& u, int n, const State& v);

// Translation operator.
State translate(const State& u);
State translate_pow(const State& u, int k);

// [u t^a, v t^b] = sum_r binom(a, r) (u_(r) v) t^{a+b-r}, as (state, power)
// pairs with the binomial folded in.
std::vector<std::pair<State, int>> mode_commutator(const State& u, int a,
                                                   const State& v, int b);

// All PBW basis words of weight <= D (including the empty word).
std::vector<Word> basis_words(const Algebra& alg, int D);

}  // namespace wsa
