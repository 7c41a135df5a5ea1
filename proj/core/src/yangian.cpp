#include "wsa/yangian.hpp"

#include <array>
#include <cassert>
#include <mutex>
#include <stdexcept>

#include "wsa/miura.hpp"

namespace wsa {

// ---------------------------------------------------------------------------
// Cartan data
// ---------------------------------------------------------------------------

CartanData::CartanData(int m, int n) : m_(m), n_(n) {}

int CartanData::p(int i) const {
  int N = m_ + n_;
  int r = ((i % N) + N) % N;
  if (r == 0) r = N;
  return r <= m_ ? 0 : 1;
}

int CartanData::node_parity(int i) const {
  if (n_ == 0) return 0;
  return (i == 0 || i == m_) ? 1 : 0;
}

int CartanData::a(int i, int j) const {
  int N = m_ + n_;
  auto sg = [](int par) { return par ? -1 : 1; };
  if (n_ == 0) {
    if (i == j) return 2;
    if ((i == 0 && j == N - 1) || (i == N - 1 && j == 0)) return -1;
    if (j == i + 1 || j == i - 1) return -1;
    return 0;
  }
  if (i == j) return sg(p(i)) + sg(p(i + 1));
  if ((i == 0 && j == N - 1) || (i == N - 1 && j == 0)) return 1;
  if (j == i + 1) return -sg(p(i + 1));
  if (j == i - 1) return -sg(p(i));
  return 0;
}

int CartanData::mmat(int i, int j) const {
  int N = m_ + n_;
  auto sg = [](int par) { return par ? -1 : 1; };
  if (n_ == 0) {
    if (i == 0 && j == N - 1) return 1;
    if (i == N - 1 && j == 0) return -1;
    if (i == j - 1) return -1;
    if (i == j + 1) return 1;
    return 0;
  }
  if (i == 0 && j == N - 1) return -1;
  if (i == N - 1 && j == 0) return 1;
  if (i == j + 1) return sg(p(i));
  if (i == j - 1) return -sg(p(i + 1));
  return 0;
}

Rational psi_ci(int i, int m) {
  int d = i > m ? i - m : 0;
  Rational r(i - 2 * d, 2);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Operator machinery
// ---------------------------------------------------------------------------

size_t ModeMemo::KeyHash::operator()(const Key& k) const {
  size_t h = std::hash<const void*>()(k.base) * 1000003u + size_t(k.a + 64);
  for (const auto& L : k.w) {
    h = h * 1000003u + size_t(int(L.gen.kind));
    h = h * 1000003u + size_t(L.gen.row);
    h = h * 1000003u + size_t(L.gen.col);
    h = h * 1000003u + size_t(L.depth);
  }
  return h;
}

State ModeMemo::nth(const std::shared_ptr<const State>& base, int a,
                    const Word& w, const Algebra* alg) {
  Key key{base.get(), a, w};
  {
    std::shared_lock lk(mtx_);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
  }
  State target(alg);
  target.add(w, Scalar(1));
  State val = nth_product(*base, a, target);
  {
    std::unique_lock lk(mtx_);
    auto [it, inserted] = map_.emplace(std::move(key), val);
    return it->second;
  }
}

namespace {

State apply_factor(const std::shared_ptr<const State>& base, int a,
                   const State& v, ModeMemo* memo) {
  const Algebra* alg = v.alg() ? v.alg() : base->alg();
  if (!memo) {
    return nth_product(*base, a, v);
  }
  State out(alg);
  for (const auto& [w, c] : v.terms()) out += c * memo->nth(base, a, w, alg);
  return out;
}

State apply_term(const OpTerm& t, const State& v, ModeMemo* memo) {
  const Algebra* alg = v.alg();
  if (t.factors.empty()) return t.coeff * v;
  if (!t.summed) {
    State cur = v;
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
      cur = apply_factor(it->base, it->off, cur, memo);
      if (cur.is_zero()) break;
    }
    return t.coeff * cur;
  }
  const OpFactor& last = t.factors.back();
  if (last.slope != 1)
    throw std::logic_error("summed term without a positive-slope tail factor");
  State acc(alg);
  int bound = last.base->weight() + v.weight();
  for (int s = 0; last.off + s < bound; ++s) {
    State cur = apply_factor(last.base, last.off + s, v, memo);
    for (auto it = t.factors.rbegin() + 1;
         it != t.factors.rend() && !cur.is_zero(); ++it)
      cur = apply_factor(it->base, it->off + it->slope * s, cur, memo);
    acc += cur;
  }
  return t.coeff * acc;
}

}  // namespace

State op_apply(const Op& op, const State& v, ModeMemo* memo) {
  State out(v.alg());
  for (const auto& t : op.terms) out += apply_term(t, v, memo);
  return out;
}

OpFn fn_of(Op op, ModeMemo* memo) {
  int par = op.parity;
  auto shared = std::make_shared<Op>(std::move(op));
  return OpFn{par, [shared, memo](const State& v) {
                return op_apply(*shared, v, memo);
              }};
}

OpFn fn_zero() {
  return OpFn{0, [](const State& v) { return State(v.alg()); }};
}

OpFn fn_add(OpFn a, OpFn b) {
  return OpFn{a.parity, [a, b](const State& v) { return a.f(v) + b.f(v); }};
}

OpFn fn_sub(OpFn a, OpFn b) {
  return OpFn{a.parity, [a, b](const State& v) { return a.f(v) - b.f(v); }};
}

OpFn fn_scale(Scalar c, OpFn a) {
  return OpFn{a.parity,
              [c, a](const State& v) { return c * a.f(v); }};
}

OpFn fn_compose(OpFn a, OpFn b) {
  return OpFn{(a.parity + b.parity) % 2,
              [a, b](const State& v) { return a.f(b.f(v)); }};
}

OpFn fn_bracket(OpFn a, OpFn b) {
  int sgn = (a.parity && b.parity) ? -1 : 1;
  return OpFn{(a.parity + b.parity) % 2, [a, b, sgn](const State& v) {
                State r = a.f(b.f(v));
                State s = b.f(a.f(v));
                if (sgn == 1) r -= s;
                else r += s;
                return r;
              }};
}

OpFn fn_anti(OpFn a, OpFn b) {
  return OpFn{(a.parity + b.parity) % 2, [a, b](const State& v) {
                return a.f(b.f(v)) + b.f(a.f(v));
              }};
}

// ---------------------------------------------------------------------------
// Generator images
// ---------------------------------------------------------------------------

namespace {

Scalar sg(int par) { return Scalar(par ? -1 : 1); }

void add_term(Op& o, Scalar c, std::vector<OpFactor> fs, bool summed = false) {
  if (c.is_zero()) return;
  o.terms.push_back(OpTerm{std::move(c), summed, std::move(fs)});
}

Op op_scaled(const Scalar& c, Op o) {
  for (auto& t : o.terms) t.coeff = c * t.coeff;
  return o;
}

void op_accum(Op& o, const Op& other, const Scalar& c) {
  for (auto t : other.terms) {
    t.coeff = c * t.coeff;
    if (!t.coeff.is_zero()) o.terms.push_back(std::move(t));
  }
}

}  // namespace

YangianImages YangianImages::phi(const Algebra& alg,
                                 const std::map<std::string, State>& W,
                                 const PhiOptions& opt) {
  const Instance& I = alg.inst();
  int N = I.N(), l = I.l, m = I.m;
  YangianImages yi(&alg, I.m, I.n);

  std::map<std::string, std::shared_ptr<const State>> ws;
  for (const auto& [k, st] : W) ws[k] = std::make_shared<State>(st);
  auto W1 = [&](int i, int j) { return ws.at(w_key(1, i, j)); };
  auto W2 = [&](int i, int j) { return ws.at(w_key(2, i, j)); };

  Scalar la = Scalar(l) * Scalar::alpha();
  Scalar lm1a = Scalar(l - 1) * Scalar::alpha();
  int pN = I.p(N);

  // Level-0 images.
  std::map<YGen, Op>& im = yi.imgs_;
  for (int i = 0; i < N; ++i) {
    Op h;
    if (i == 0) {
      add_term(h, sg(pN), {{W1(N, N), 0, 0}});
      add_term(h, Scalar(-1), {{W1(1, 1), 0, 0}});
      add_term(h, la, {});
    } else {
      add_term(h, sg(I.p(i)), {{W1(i, i), 0, 0}});
      add_term(h, -sg(I.p(i + 1)), {{W1(i + 1, i + 1), 0, 0}});
    }
    im[{YFam::H, i, 0}] = std::move(h);

    Op xp, xm;
    int pn = yi.cd_.node_parity(i);
    xp.parity = xm.parity = pn;
    if (i == 0) {
      add_term(xp, Scalar(1), {{W1(1, N), 1, 0}});
      add_term(xm, sg(pN), {{W1(N, 1), -1, 0}});
    } else {
      add_term(xp, Scalar(1), {{W1(i + 1, i), 0, 0}});
      add_term(xm, sg(I.p(i)), {{W1(i, i + 1), 0, 0}});
    }
    im[{YFam::Xp, i, 0}] = std::move(xp);
    im[{YFam::Xm, i, 0}] = std::move(xm);
  }

  // Level-1 images.
  for (int i = 0; i < N; ++i) {
    int pn = yi.cd_.node_parity(i);
    Op h;
    if (i == 0) {
      add_term(h, sg(pN), {{W2(N, N), 1, 0}});
      add_term(h, Scalar(-1), {{W2(1, 1), 1, 0}});
      add_term(h, sg(pN) * lm1a, {{W1(N, N), 0, 0}});
      op_accum(h, im.at({YFam::H, 0, 0}), -la);
      add_term(h, sg(pN), {{W1(N, N), 0, 0}, {W1(1, 1), 0, 0}});
      add_term(h, -sg(pN) * la, {{W1(N, N), 0, 0}});
      for (int u = 1; u <= N; ++u) {
        add_term(h, -sg(pN) * sg(I.p(u)),
                 {{W1(u, N), 0, -1}, {W1(N, u), 0, 1}}, true);
        add_term(h, sg(I.p(u)), {{W1(u, 1), -1, -1}, {W1(1, u), 1, 1}}, true);
      }
    } else {
      add_term(h, sg(I.p(i)), {{W2(i, i), 1, 0}});
      add_term(h, -sg(I.p(i + 1)), {{W2(i + 1, i + 1), 1, 0}});
      op_accum(h, im.at({YFam::H, i, 0}), Scalar(psi_ci(i, m)));
      add_term(h, sg(I.pe(i, i + 1)),
               {{W1(i, i), 0, 0}, {W1(i + 1, i + 1), 0, 0}});
      for (int u = 1; u <= N; ++u) {
        int d = u <= i ? 0 : 1;
        add_term(h, -sg(I.p(i)) * sg(I.p(u)),
                 {{W1(u, i), -d, -1}, {W1(i, u), d, 1}}, true);
        add_term(h, sg(I.p(i + 1)) * sg(I.p(u)),
                 {{W1(u, i + 1), -d, -1}, {W1(i + 1, u), d, 1}}, true);
      }
    }
    im[{YFam::H, i, 1}] = std::move(h);

    Op xp;
    xp.parity = pn;
    if (i == 0) {
      Scalar lead = opt.mutate == "phi-x0p1-alpha" ? la : lm1a;
      add_term(xp, Scalar(1), {{W2(1, N), 2, 0}});
      add_term(xp, lead, {{W1(1, N), 1, 0}});
      op_accum(xp, im.at({YFam::Xp, 0, 0}), -la);
      for (int u = 1; u <= N; ++u)
        add_term(xp, -sg(I.p(u)), {{W1(u, N), 0, -1}, {W1(1, u), 1, 1}}, true);
    } else {
      add_term(xp, Scalar(1), {{W2(i + 1, i), 1, 0}});
      op_accum(xp, im.at({YFam::Xp, i, 0}), Scalar(psi_ci(i, m)));
      for (int u = 1; u <= N; ++u) {
        int d = u <= i ? 0 : 1;
        add_term(xp, -sg(I.p(u)),
                 {{W1(u, i), -d, -1}, {W1(i + 1, u), d, 1}}, true);
      }
    }
    im[{YFam::Xp, i, 1}] = std::move(xp);

    Op xm;
    xm.parity = pn;
    if (i == 0) {
      add_term(xm, sg(pN), {{W2(N, 1), 0, 0}});
      op_accum(xm, im.at({YFam::Xm, 0, 0}), -la);
      for (int u = 1; u <= N; ++u) {
        auto first = opt.x0m1_transposed ? W1(u, 1) : W1(1, u);
        add_term(xm, -sg(pN) * sg(I.p(u)),
                 {{first, -1, -1}, {W1(N, u), 0, 1}}, true);
      }
    } else {
      add_term(xm, sg(I.p(i)), {{W2(i, i + 1), 1, 0}});
      op_accum(xm, im.at({YFam::Xm, i, 0}), Scalar(psi_ci(i, m)));
      for (int u = 1; u <= N; ++u) {
        int d = u <= i ? 0 : 1;
        add_term(xm, -sg(I.p(i)) * sg(I.p(u)),
                 {{W1(u, i + 1), -d, -1}, {W1(i, u), d, 1}}, true);
      }
    }
    im[{YFam::Xm, i, 1}] = std::move(xm);
  }
  return yi;
}

YangianImages YangianImages::ev(const Algebra& glhat, const EvOptions& opt) {
  const Instance& I = glhat.inst();
  int N = I.N(), m = I.m;
  YangianImages yi(&glhat, I.m, I.n);
  const Scalar& hb = opt.hbar;
  const Scalar& ct = opt.ctilde;
  int pN = I.p(N);

  std::map<std::pair<int, int>, std::shared_ptr<const State>> es;
  auto E = [&](int i, int j) {
    auto& slot = es[{i, j}];
    if (!slot)
      slot = std::make_shared<State>(gen_state(glhat, Gen{Kind::Current, i, j}, 1));
    return slot;
  };

  std::map<YGen, Op>& im = yi.imgs_;
  for (int i = 0; i < N; ++i) {
    Op h;
    if (i == 0) {
      add_term(h, sg(pN), {{E(N, N), 0, 0}});
      add_term(h, Scalar(-1), {{E(1, 1), 0, 0}});
      add_term(h, ct, {});
    } else {
      add_term(h, sg(I.p(i)), {{E(i, i), 0, 0}});
      add_term(h, -sg(I.p(i + 1)), {{E(i + 1, i + 1), 0, 0}});
    }
    im[{YFam::H, i, 0}] = std::move(h);

    Op xp, xm;
    int pn = yi.cd_.node_parity(i);
    xp.parity = xm.parity = pn;
    if (i == 0) {
      add_term(xp, Scalar(1), {{E(N, 1), 1, 0}});
      add_term(xm, sg(pN), {{E(1, N), -1, 0}});
    } else {
      add_term(xp, Scalar(1), {{E(i, i + 1), 0, 0}});
      add_term(xm, sg(I.p(i)), {{E(i + 1, i), 0, 0}});
    }
    im[{YFam::Xp, i, 0}] = std::move(xp);
    im[{YFam::Xm, i, 0}] = std::move(xm);
  }

  for (int i = 0; i < N; ++i) {
    int pn = yi.cd_.node_parity(i);
    Op h;
    if (i == 0) {
      Scalar lead = hb * ct;
      if (opt.mutate == "ev-h01-ctilde") lead = Scalar(2) * lead;
      op_accum(h, im.at({YFam::H, 0, 0}), lead);
      add_term(h, -sg(pN) * hb, {{E(N, N), 0, 0}, {E(1, 1), 0, 0}});
      add_term(h, sg(pN) * hb * ct, {{E(N, N), 0, 0}});
      for (int k = 1; k <= N; ++k) {
        add_term(h, sg(pN) * hb * sg(I.p(k)),
                 {{E(N, k), 0, -1}, {E(k, N), 0, 1}}, true);
        add_term(h, -hb * sg(I.p(k)), {{E(1, k), -1, -1}, {E(k, 1), 1, 1}},
                 true);
      }
    } else {
      op_accum(h, im.at({YFam::H, i, 0}), Scalar(-psi_ci(i, m)) * hb);
      add_term(h, -sg(I.pe(i, i + 1)) * hb,
               {{E(i, i), 0, 0}, {E(i + 1, i + 1), 0, 0}});
      for (int k = 1; k <= N; ++k) {
        int d1 = k <= i + opt.bh1 ? 0 : 1;
        int d2 = k <= i + opt.bh2 ? 0 : 1;
        add_term(h, hb * sg(I.p(i)) * sg(I.p(k)),
                 {{E(i, k), -d1, -1}, {E(k, i), d1, 1}}, true);
        add_term(h, -hb * sg(I.p(i + 1)) * sg(I.p(k)),
                 {{E(i + 1, k), -d2, -1}, {E(k, i + 1), d2, 1}}, true);
      }
    }
    im[{YFam::H, i, 1}] = std::move(h);

    Op xp;
    xp.parity = pn;
    if (i == 0) {
      op_accum(xp, im.at({YFam::Xp, 0, 0}), hb * ct);
      for (int k = 1; k <= N; ++k)
        add_term(xp, hb * sg(I.p(k)), {{E(N, k), 0, -1}, {E(k, 1), 1, 1}},
                 true);
    } else {
      op_accum(xp, im.at({YFam::Xp, i, 0}), Scalar(-psi_ci(i, m)) * hb);
      for (int k = 1; k <= N; ++k) {
        int d = k <= i + opt.bxp ? 0 : 1;
        add_term(xp, hb * sg(I.p(k)),
                 {{E(i, k), -d, -1}, {E(k, i + 1), d, 1}}, true);
      }
    }
    im[{YFam::Xp, i, 1}] = std::move(xp);

    Op xm;
    xm.parity = pn;
    if (i == 0) {
      op_accum(xm, im.at({YFam::Xm, 0, 0}), hb * ct);
      for (int k = 1; k <= N; ++k)
        add_term(xm, sg(pN) * hb * sg(I.p(k)),
                 {{E(1, k), -1, -1}, {E(k, N), 0, 1}}, true);
    } else {
      op_accum(xm, im.at({YFam::Xm, i, 0}), Scalar(-psi_ci(i, m)) * hb);
      for (int k = 1; k <= N; ++k) {
        int d = k <= i + opt.bxm ? 0 : 1;
        add_term(xm, sg(I.p(i)) * hb * sg(I.p(k)),
                 {{E(i + 1, k), -d, -1}, {E(k, i), d, 1}}, true);
      }
    }
    im[{YFam::Xm, i, 1}] = std::move(xm);
  }
  return yi;
}

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

namespace {

std::string idx2(const char* a, int i, const char* b, int j) {
  return std::string(a) + "=" + std::to_string(i) + " " + b + "=" +
         std::to_string(j);
}

struct GenFns {
  // fns[fam][node][level]
  std::vector<std::array<std::array<OpFn, 2>, 3>> fns;
  OpFn get(YFam f, int node, int level) const {
    return fns[node][int(f)][level];
  }
};

GenFns make_fns(const YangianImages& yi, ModeMemo* memo) {
  GenFns g;
  int N = yi.cartan().N();
  g.fns.resize(N);
  for (int i = 0; i < N; ++i)
    for (int lv = 0; lv <= 1; ++lv) {
      g.fns[i][int(YFam::H)][lv] = fn_of(yi.image({YFam::H, i, lv}), memo);
      g.fns[i][int(YFam::Xp)][lv] = fn_of(yi.image({YFam::Xp, i, lv}), memo);
      g.fns[i][int(YFam::Xm)][lv] = fn_of(yi.image({YFam::Xm, i, lv}), memo);
    }
  return g;
}

}  // namespace

std::vector<YRelation> uppercase_relations(const YangianImages& yi,
                                           const Scalar& hbar,
                                           const Scalar& eps, ModeMemo* memo) {
  const CartanData& cd = yi.cartan();
  int N = cd.N(), m = yi.m(), n = yi.n();
  GenFns g = make_fns(yi, memo);
  auto H = [&](int i, int lv) { return g.get(YFam::H, i, lv); };
  auto X = [&](int sgn, int i, int lv) {
    return g.get(sgn > 0 ? YFam::Xp : YFam::Xm, i, lv);
  };
  Rational half(1, 2);
  Scalar bnd = eps + Scalar(Rational(m - n, 2)) * hbar;  // eps + (m-n)/2 * hbar
  std::vector<YRelation> out;

  auto Ht = [&](int i) {
    // H~_{i,1} = H_{i,1} - (hbar/2) H_{i,0}^2
    return fn_sub(H(i, 1), fn_scale(hbar * Scalar(half),
                                    fn_compose(H(i, 0), H(i, 0))));
  };

  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j)
      for (int r = 0; r <= 1; ++r)
        for (int s = (i == j ? r : 0); s <= 1; ++s)
          out.push_back({"Eq2.1",
                         idx2("i", i, "j", j) + " " + idx2("r", r, "s", s),
                         fn_bracket(H(i, r), H(j, s))});

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      OpFn d = i == j ? H(i, 0) : fn_zero();
      out.push_back({"Eq2.2", idx2("i", i, "j", j),
                     fn_sub(fn_bracket(X(+1, i, 0), X(-1, j, 0)), d)});
      OpFn d1 = i == j ? H(i, 1) : fn_zero();
      out.push_back({"Eq2.3", idx2("i", i, "j", j) + " lhs",
                     fn_sub(fn_bracket(X(+1, i, 1), X(-1, j, 0)), d1)});
      out.push_back({"Eq2.3", idx2("i", i, "j", j) + " rhs",
                     fn_sub(fn_bracket(X(+1, i, 0), X(-1, j, 1)), d1)});
    }

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int sgn : {+1, -1})
        for (int r = 0; r <= 1; ++r)
          out.push_back(
              {"Eq2.4",
               idx2("i", i, "j", j) + (sgn > 0 ? " +" : " -") + " r=" +
                   std::to_string(r),
               fn_sub(fn_bracket(H(i, 0), X(sgn, j, r)),
                      fn_scale(Scalar(sgn * cd.a(i, j)), X(sgn, j, r)))});

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      bool corner = (i == 0 && j == N - 1) || (i == N - 1 && j == 0);
      if (corner) continue;
      for (int sgn : {+1, -1})
        out.push_back({"Eq2.5",
                       idx2("i", i, "j", j) + (sgn > 0 ? " +" : " -"),
                       fn_sub(fn_bracket(Ht(i), X(sgn, j, 0)),
                              fn_scale(Scalar(sgn * cd.a(i, j)), X(sgn, j, 1)))});
    }

  int pNnode = (n == 0) ? 0 : cd.p(0);  // p(m+n)
  Scalar spN = Scalar(pNnode ? -1 : 1);
  for (int sgn : {+1, -1}) {
    // Eq2.6: [H~_{0,1}, X_{N-1,0}] = -+ (-1)^{p(N)}(X_{N-1,1} - bnd X_{N-1,0})
    OpFn rhs6 = fn_scale(Scalar(-sgn) * spN,
                         fn_sub(X(sgn, N - 1, 1), fn_scale(bnd, X(sgn, N - 1, 0))));
    out.push_back({"Eq2.6", sgn > 0 ? "+" : "-",
                   fn_sub(fn_bracket(Ht(0), X(sgn, N - 1, 0)), rhs6)});
    // Eq2.7: [H~_{N-1,1}, X_{0,0}] = -+ (-1)^{p(N)}(X_{0,1} + bnd X_{0,0})
    OpFn rhs7 = fn_scale(Scalar(-sgn) * spN,
                         fn_add(X(sgn, 0, 1), fn_scale(bnd, X(sgn, 0, 0))));
    out.push_back({"Eq2.7", sgn > 0 ? "+" : "-",
                   fn_sub(fn_bracket(Ht(N - 1), X(sgn, 0, 0)), rhs7)});
  }

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      bool corner = (i == 0 && j == N - 1) || (i == N - 1 && j == 0);
      if (corner) continue;
      for (int sgn : {+1, -1}) {
        OpFn lhs = fn_sub(fn_bracket(X(sgn, i, 1), X(sgn, j, 0)),
                          fn_bracket(X(sgn, i, 0), X(sgn, j, 1)));
        OpFn rhs = fn_scale(Scalar(sgn * cd.a(i, j)) * hbar * Scalar(half),
                            fn_anti(X(sgn, i, 0), X(sgn, j, 0)));
        out.push_back({"Eq2.8", idx2("i", i, "j", j) + (sgn > 0 ? " +" : " -"),
                       fn_sub(lhs, rhs)});
      }
    }

  for (int sgn : {+1, -1}) {
    OpFn lhs = fn_sub(fn_bracket(X(sgn, 0, 1), X(sgn, N - 1, 0)),
                      fn_bracket(X(sgn, 0, 0), X(sgn, N - 1, 1)));
    OpFn rhs = fn_sub(
        fn_scale(Scalar(-sgn) * spN * hbar * Scalar(half),
                 fn_anti(X(sgn, 0, 0), X(sgn, N - 1, 0))),
        fn_scale(bnd, fn_bracket(X(sgn, 0, 0), X(sgn, N - 1, 0))));
    out.push_back({"Eq2.9", sgn > 0 ? "+" : "-", fn_sub(lhs, rhs), n == 1});
  }

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      int times = 1 + std::abs(cd.a(i, j));
      for (int sgn : {+1, -1}) {
        OpFn acc = X(sgn, j, 0);
        for (int k = 0; k < times; ++k) acc = fn_bracket(X(sgn, i, 0), acc);
        out.push_back({"Eq2.10",
                       idx2("i", i, "j", j) + (sgn > 0 ? " +" : " -"), acc});
      }
    }

  if (n > 0) {
    for (int i : {0, m})
      for (int sgn : {+1, -1}) {
        out.push_back({"Eq2.11", "i=" + std::to_string(i) + (sgn > 0 ? " +" : " -"),
                       fn_bracket(X(sgn, i, 0), X(sgn, i, 0))});
        int im1 = (i - 1 + N) % N, ip1 = (i + 1) % N;
        out.push_back(
            {"Eq2.12", "i=" + std::to_string(i) + (sgn > 0 ? " +" : " -"),
             fn_bracket(fn_bracket(X(sgn, im1, 0), X(sgn, i, 0)),
                        fn_bracket(X(sgn, i, 0), X(sgn, ip1, 0))),
             n == 1});
      }
  }
  return out;
}

std::vector<YRelation> lowercase_relations(const YangianImages& yi,
                                           const Scalar& eps1,
                                           const Scalar& eps2, ModeMemo* memo) {
  const CartanData& cd = yi.cartan();
  int N = cd.N(), m = yi.m(), n = yi.n();
  GenFns g = make_fns(yi, memo);
  Scalar hbar = eps1 + eps2;
  Scalar diff = eps1 - eps2;
  Rational half(1, 2);

  // Lowercase generators through the Psi translation.
  auto h = [&](int i, int lv) {
    OpFn up = g.get(YFam::H, i, lv);
    if (lv == 0 || i == 0) return up;
    Scalar c = Scalar(psi_ci(i, m)) * diff;
    return fn_sub(up, fn_scale(c, g.get(YFam::H, i, 0)));
  };
  auto x = [&](int sgn, int i, int lv) {
    OpFn up = g.get(sgn > 0 ? YFam::Xp : YFam::Xm, i, lv);
    if (lv == 0 || i == 0) return up;
    Scalar c = Scalar(psi_ci(i, m)) * diff;
    return fn_sub(up, fn_scale(c, g.get(sgn > 0 ? YFam::Xp : YFam::Xm, i, 0)));
  };
  auto ht = [&](int i) {
    return fn_sub(h(i, 1),
                  fn_scale(hbar * Scalar(half), fn_compose(h(i, 0), h(i, 0))));
  };

  std::vector<YRelation> out;
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j)
      for (int r = 0; r <= 1; ++r)
        for (int s = (i == j ? r : 0); s <= 1; ++s)
          out.push_back({"eq2.1",
                         idx2("i", i, "j", j) + " " + idx2("r", r, "s", s),
                         fn_bracket(h(i, r), h(j, s))});

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      OpFn d0 = i == j ? h(i, 0) : fn_zero();
      OpFn d1 = i == j ? h(i, 1) : fn_zero();
      out.push_back({"eq2.2", idx2("i", i, "j", j),
                     fn_sub(fn_bracket(x(+1, i, 0), x(-1, j, 0)), d0)});
      out.push_back({"eq2.3", idx2("i", i, "j", j) + " lhs",
                     fn_sub(fn_bracket(x(+1, i, 1), x(-1, j, 0)), d1)});
      out.push_back({"eq2.3", idx2("i", i, "j", j) + " rhs",
                     fn_sub(fn_bracket(x(+1, i, 0), x(-1, j, 1)), d1)});
    }

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int sgn : {+1, -1}) {
        for (int r = 0; r <= 1; ++r)
          out.push_back(
              {"eq2.4",
               idx2("i", i, "j", j) + (sgn > 0 ? " +" : " -") + " r=" +
                   std::to_string(r),
               fn_sub(fn_bracket(h(i, 0), x(sgn, j, r)),
                      fn_scale(Scalar(sgn * cd.a(i, j)), x(sgn, j, r)))});
        // eq2.5
        OpFn rhs = fn_scale(
            Scalar(sgn * cd.a(i, j)),
            fn_sub(x(sgn, j, 1),
                   fn_scale(Scalar(cd.mmat(i, j)) * diff * Scalar(half),
                            x(sgn, j, 0))));
        out.push_back({"eq2.5", idx2("i", i, "j", j) + (sgn > 0 ? " +" : " -"),
                       fn_sub(fn_bracket(ht(i), x(sgn, j, 0)), rhs)});
        // eq2.6
        OpFn lhs6 = fn_sub(fn_bracket(x(sgn, i, 1), x(sgn, j, 0)),
                           fn_bracket(x(sgn, i, 0), x(sgn, j, 1)));
        OpFn rhs6 = fn_sub(
            fn_scale(Scalar(sgn * cd.a(i, j)) * hbar * Scalar(half),
                     fn_anti(x(sgn, i, 0), x(sgn, j, 0))),
            fn_scale(Scalar(cd.mmat(i, j)) * diff * Scalar(half),
                     fn_bracket(x(sgn, i, 0), x(sgn, j, 0))));
        bool corner6 = (i == 0 && j == N - 1) || (i == N - 1 && j == 0);
        out.push_back({"eq2.6", idx2("i", i, "j", j) + (sgn > 0 ? " +" : " -"),
                       fn_sub(lhs6, rhs6), n == 1 && corner6});
      }

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      int times = 1 + std::abs(cd.a(i, j));
      for (int sgn : {+1, -1}) {
        OpFn acc = x(sgn, j, 0);
        for (int k = 0; k < times; ++k) acc = fn_bracket(x(sgn, i, 0), acc);
        out.push_back({"eq2.7",
                       idx2("i", i, "j", j) + (sgn > 0 ? " +" : " -"), acc});
      }
    }

  if (n > 0) {
    for (int i : {0, m})
      for (int sgn : {+1, -1}) {
        out.push_back({"eq2.8", "i=" + std::to_string(i) + (sgn > 0 ? " +" : " -"),
                       fn_bracket(x(sgn, i, 0), x(sgn, i, 0))});
        int im1 = (i - 1 + N) % N, ip1 = (i + 1) % N;
        out.push_back(
            {"eq2.9", "i=" + std::to_string(i) + (sgn > 0 ? " +" : " -"),
             fn_bracket(fn_bracket(x(sgn, im1, 0), x(sgn, i, 0)),
                        fn_bracket(x(sgn, i, 0), x(sgn, ip1, 0))),
             n == 1});
      }
  }
  return out;
}

bool relation_holds(const YRelation& rel, const Algebra& alg, int D,
                    State* witness) {
  for (const auto& w : basis_words(alg, D)) {
    State v(&alg);
    v.add(w, Scalar(1));
    State r = rel.residual.f(v);
    if (!r.is_zero()) {
      if (witness) *witness = r;
      return false;
    }
  }
  return true;
}

}  // namespace wsa
