#pragma once

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "wsa/state.hpp"

namespace wsa {

// Cartan data of the affine (super) Yangian: the matrices a_{ij} and m_{ij}
// on nodes 0..N-1.  For n = 0 the non-super tables are used (they differ from
// the super tables specialized to n = 0 only in the corner entries of m).
class CartanData {
 public:
  CartanData(int m, int n);
  int N() const { return m_ + n_; }
  int a(int i, int j) const;
  int mmat(int i, int j) const;
  // 1 iff the node-i generators X^{+-}_{i,r} are odd (i = 0 and i = m, super
  // case only).
  int node_parity(int i) const;
  // Residue parity p(i) with the affine convention p(0) = p(N).
  int p(int i) const;

 private:
  int m_, n_;
};

// One factor u t^{a} of a term in the completed enveloping algebra; the
// exponent is off + slope*s where s is the running summation index of the
// enclosing term (slope 0 for unsummed factors).
struct OpFactor {
  std::shared_ptr<const State> base;
  int off = 0;
  int slope = 0;
};

// coeff * sum_{s>=0} F_1 ... F_k (factors applied right-to-left).  If summed,
// the rightmost factor must have slope +1 so that evaluation on a fixed state
// terminates.  A term with no factors is a scalar multiple of the identity
// (|0> t^{-1} = 1).
struct OpTerm {
  Scalar coeff;
  bool summed = false;
  std::vector<OpFactor> factors;
};

struct Op {
  int parity = 0;
  std::vector<OpTerm> terms;
};

// Thread-safe memo for u_(a) w on single basis words (concurrent reads,
// idempotent writes).
class ModeMemo {
 public:
  State nth(const std::shared_ptr<const State>& base, int a, const Word& w,
            const Algebra* alg);

 private:
  struct Key {
    const State* base;
    int a;
    Word w;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const;
  };
  std::unordered_map<Key, State, KeyHash> map_;
  std::shared_mutex mtx_;
};

State op_apply(const Op& op, const State& v, ModeMemo* memo = nullptr);

// Linear operators with parity, closed under the super bracket.
struct OpFn {
  int parity = 0;
  std::function<State(const State&)> f;
};

OpFn fn_of(Op op, ModeMemo* memo);
OpFn fn_add(OpFn a, OpFn b);
OpFn fn_sub(OpFn a, OpFn b);
OpFn fn_scale(Scalar c, OpFn a);
OpFn fn_compose(OpFn a, OpFn b);            // a after b
OpFn fn_bracket(OpFn a, OpFn b);            // ab - (-1)^{p(a)p(b)} ba
OpFn fn_anti(OpFn a, OpFn b);               // ab + ba
OpFn fn_zero();

enum class YFam { H, Xp, Xm };
struct YGen {
  YFam fam;
  int node;
  int level;  // 0 or 1
  auto operator<=>(const YGen&) const = default;
};

struct PhiOptions {
  // Read the summed term of the image of X^-_{0,1} with the first factor's
  // indices transposed (W1_{u,1} instead of W1_{1,u}).  This is the reading
  // consistent with the evaluation-map analogue and the one under which the
  // defining relations hold; false selects the other candidate reading.
  bool x0m1_transposed = true;
  std::string mutate;  // "phi-x0p1-alpha" supported
};

struct EvOptions {
  Scalar hbar;    // eps1 + eps2
  Scalar ctilde;  // (-m+n) eps1 / hbar, must match the algebra's cocycle value
  std::string mutate;  // "ev-h01-ctilde" supported
  // Damping-boundary offsets for the Sigma_k sums of the level-1 images
  // (i != 0): the modes are (-s),(s) for k <= i + offset and (-s-1),(s+1)
  // beyond.  0 is the printed reading ("k <= i" in every sum).
  int bh1 = 0;  // H_{i,1}, E_{i,.} sums
  int bh2 = 0;  // H_{i,1}, E_{i+1,.} sums
  int bxp = 0;  // X^+_{i,1}
  int bxm = 0;  // X^-_{i,1}
};

// The generator images of the homomorphism into the completed enveloping
// algebra: Phi (rectangular W target) or ev (affine gl(m|n) target).
class YangianImages {
 public:
  static YangianImages phi(const Algebra& alg,
                           const std::map<std::string, State>& W,
                           const PhiOptions& opt);
  static YangianImages ev(const Algebra& glhat, const EvOptions& opt);

  const Op& image(const YGen& g) const { return imgs_.at(g); }
  const Algebra* alg() const { return alg_; }
  const CartanData& cartan() const { return cd_; }
  int m() const { return m_; }
  int n() const { return n_; }

 private:
  YangianImages(const Algebra* alg, int m, int n) : alg_(alg), cd_(m, n), m_(m), n_(n) {}
  const Algebra* alg_;
  CartanData cd_;
  int m_, n_;
  std::map<YGen, Op> imgs_;
};

struct YRelation {
  std::string id;      // e.g. "Eq2.5"
  std::string detail;  // index instantiation, e.g. "i=1 j=2 sign=+"
  OpFn residual;       // LHS - RHS; the relation holds iff this annihilates
  // True when the instance falls outside the presentation hypothesis
  // (m, n >= 2): at n = 1 the corner node m+n-1 is adjacent to node 0 on both
  // sides, and the relations combining the two corner bonds (Eq2.9, Eq2.12,
  // the corner instances of eq2.6, and eq2.9) do not survive the degeneration.
  bool degenerate = false;
};

// All instances of the finite uppercase presentation (Eq2.1-Eq2.12; for n = 0
// the non-super variant: Eq2.11/Eq2.12 are dropped).  hbar = eps1+eps2 and
// eps = -(m-n) eps2 must match the parameters of the images.
std::vector<YRelation> uppercase_relations(const YangianImages& yi,
                                           const Scalar& hbar,
                                           const Scalar& eps, ModeMemo* memo);

// All instances of the lowercase presentation at levels r,s <= 1
// (eq2.1-eq2.9; for n = 0 without eq2.8/eq2.9), with the lowercase generators
// expressed through the uppercase images via the Psi translation
// h_{i,1} -> H_{i,1} - c_i (eps1-eps2) H_{i,0} (and likewise for x).
std::vector<YRelation> lowercase_relations(const YangianImages& yi,
                                           const Scalar& eps1,
                                           const Scalar& eps2, ModeMemo* memo);

// The coefficient c_i = (i - 2 d(i > m)(i - m)) / 2 of the Psi translation.
Rational psi_ci(int i, int m);

// True iff rel.residual annihilates every basis word of weight <= D; on
// failure *witness (if given) receives the first violating word's residual.
bool relation_holds(const YRelation& rel, const Algebra& alg, int D,
                    State* witness);

}  // namespace wsa
