#include "wsa/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <thread>

#include <nlohmann/json.hpp>

#include "wsa/miura.hpp"
#include "wsa/serialize.hpp"
#include "wsa/yangian.hpp"

namespace wsa {

namespace {

using Clock = std::chrono::steady_clock;

// One unit of work: returns "" on pass, otherwise the residual description.
struct Task {
  std::string id;
  std::string ref;
  std::function<std::string()> run;
};

void run_tasks(const std::vector<Task>& tasks, int jobs,
               std::vector<CheckResult>& out) {
  size_t base = out.size();
  out.resize(base + tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      CheckResult& r = out[base + i];
      r.id = tasks[i].id;
      r.paper_ref = tasks[i].ref;
      auto t0 = Clock::now();
      try {
        r.residual = tasks[i].run();
        r.status = r.residual.empty() ? "pass" : "fail";
      } catch (const std::exception& e) {
        r.status = "fail";
        r.residual = std::string("exception: ") + e.what();
      }
      r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     Clock::now() - t0)
                     .count();
    }
  };
  int J = std::max(1, jobs);
  if (J == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < J; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
}

std::string diff_str(const State& lhs, const State& rhs) {
  State d = lhs - rhs;
  if (d.is_zero()) return "";
  return d.str();
}

int sg(int p) { return p % 2 ? -1 : 1; }
int del(int x, int y) { return x == y ? 1 : 0; }

std::string idx(std::initializer_list<std::pair<const char*, int>> parts) {
  std::string s;
  for (const auto& [k, v] : parts) {
    if (!s.empty()) s += " ";
    s += k;
    s += "=";
    s += std::to_string(v);
  }
  return s;
}

// ---------------------------------------------------------------- gen / d0

void suite_gen(const SuiteConfig& cfg, std::vector<CheckResult>& out) {
  auto alg = std::make_shared<Algebra>(cfg.inst, Algebra::Type::Amn);
  alg->set_c_zero(cfg.c_zero);
  auto W = std::make_shared<std::map<std::string, State>>(
      load_or_build_W(*alg, cfg.cache));
  int N = cfg.inst.N();
  std::string mut = cfg.mutate == "gen-w2-depth2-coeff" ? cfg.mutate : "";
  std::vector<Task> tasks;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      tasks.push_back({"gen/W1 " + idx({{"i", i}, {"j", j}}), "eq. W1",
                       [=] { return diff_str(W->at(w_key(1, i, j)),
                                             W1_closed(*alg, i, j)); }});
      if (cfg.inst.l >= 2)
        tasks.push_back({"gen/W2 " + idx({{"i", i}, {"j", j}}), "eq. W2",
                         [=] { return diff_str(W->at(w_key(2, i, j)),
                                               W2_closed(*alg, i, j, mut)); }});
    }
  run_tasks(tasks, cfg.jobs, out);
}

void suite_d0(const SuiteConfig& cfg, std::vector<CheckResult>& out) {
  auto alg = std::make_shared<Algebra>(cfg.inst, Algebra::Type::Amn);
  alg->set_c_zero(cfg.c_zero);
  auto W = std::make_shared<std::map<std::string, State>>(
      load_or_build_W(*alg, cfg.cache));
  int N = cfg.inst.N();
  std::string mut = cfg.mutate == "d0-drop-ghost-shift" ? cfg.mutate : "";
  std::vector<Task> tasks;
  for (int r = 1; r <= cfg.inst.l; ++r)
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        tasks.push_back({"d0/" + idx({{"r", r}, {"i", i}, {"j", j}}),
                         "Thm 3.2 (d0 kernel)", [=] {
                           State im = d0_apply(W->at(w_key(r, i, j)), mut);
                           return im.is_zero() ? std::string() : im.str();
                         }});
  run_tasks(tasks, cfg.jobs, out);
}

// --------------------------------------------------------------------- ope

void suite_ope(const SuiteConfig& cfg, std::vector<CheckResult>& out) {
  if (cfg.inst.l < 2)
    throw ConfigError("ope suite requires l >= 2 (no W^(2) at l = 1)");
  // c stays symbolic: the section-4 identities live in Q[alpha, c].
  auto alg = std::make_shared<Algebra>(cfg.inst, Algebra::Type::Amn);
  auto Wm = std::make_shared<std::map<std::string, State>>(
      load_or_build_W(*alg, cfg.cache));
  const Instance I = cfg.inst;
  int N = I.N(), l = I.l;
  Scalar a = Scalar::alpha(), c = Scalar::c();
  auto W1 = [Wm](int i, int j) -> const State& { return Wm->at(w_key(1, i, j)); };
  auto W2 = [Wm](int i, int j) -> const State& { return Wm->at(w_key(2, i, j)); };
  // kappa(e_{w,v}, e_{j,i}) as it enters the second product of Lemma 4.3.
  auto kap = [=](int w, int v, int j, int i) {
    return Scalar(del(w, i) * del(v, j) * sg(I.p(w))) * a -
           Scalar(del(v, w) * del(j, i) * sg(I.p(w) + I.p(j))) *
               (Scalar(l) * c - Scalar(1));
  };
  bool mut_lem4 = cfg.mutate == "ope-lem4-c-coeff";
  // The (l-1)^2 c - (l-1) coefficient of Lemma 4.5; the named mutation flips
  // the sign of its constant part.
  Scalar cterm = Scalar((l - 1) * (l - 1)) * c -
                 Scalar(mut_lem4 ? -(l - 1) : (l - 1));
  std::vector<Task> tasks;

  // Lemma 4.2: (W1_{u,v})_(0) W2_{i,j}.
  for (int u = 1; u <= N; ++u)
    for (int v = 1; v <= N; ++v)
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
          tasks.push_back(
              {"ope/W1-0-W2 " + idx({{"u", u}, {"v", v}, {"i", i}, {"j", j}}),
               "Lemma 4.2", [=] {
                 State rhs = Scalar(del(j, u)) * W2(i, v) -
                             Scalar(del(i, v) * sg(I.pe(u, v) * I.pe(i, j))) *
                                 W2(u, j);
                 return diff_str(nth_product(W1(u, v), 0, W2(i, j)), rhs);
               }});

  // Lemma 4.3: the (1)-, (2)- and (s>=3)-products.
  for (int v = 1; v <= N; ++v)
    for (int w = 1; w <= N; ++w)
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
          auto ids = idx({{"v", v}, {"w", w}, {"i", i}, {"j", j}});
          tasks.push_back({"ope/W1-1-W2 " + ids, "Lemma 4.3", [=] {
                             State rhs =
                                 Scalar(del(j, v) * (l - 1)) * a * W1(i, w) -
                                 Scalar(del(v, w) * sg(I.p(w)) * (l - 1)) *
                                     (Scalar(l) * c - Scalar(1)) * W1(i, j);
                             return diff_str(nth_product(W1(v, w), 1, W2(i, j)),
                                             rhs);
                           }});
          tasks.push_back({"ope/W1-2-W2 " + ids, "Lemma 4.3", [=] {
                             State rhs = Scalar(l * (l - 1)) * a *
                                         kap(w, v, j, i) * vacuum(*alg);
                             return diff_str(nth_product(W1(v, w), 2, W2(i, j)),
                                             rhs);
                           }});
          tasks.push_back({"ope/W1-s-W2 " + ids, "Lemma 4.3 (s >= 3)", [=] {
                             for (int s = 3; s <= 5; ++s) {
                               State r = nth_product(W1(v, w), s, W2(i, j));
                               if (!r.is_zero()) return r.str();
                             }
                             return std::string();
                           }});
        }

  // Corollary 4.4: [W1_{v,w} t^s, W2_{i,j} t^u] for |s|,|u| <= 2.
  for (int v = 1; v <= N; ++v)
    for (int w = 1; w <= N; ++w)
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
          for (int s = -2; s <= 2; ++s)
            for (int u = -2; u <= 2; ++u)
              tasks.push_back(
                  {"ope/commutator " + idx({{"v", v}, {"w", w}, {"i", i},
                                            {"j", j}, {"s", s}, {"u", u}}),
                   "Cor. 4.4", [=] {
                     std::map<int, State> got;
                     for (auto& [st, pw] :
                          mode_commutator(W1(v, w), s, W2(i, j), u)) {
                       auto it = got.find(pw);
                       if (it == got.end()) got.emplace(pw, st);
                       else it->second += st;
                     }
                     std::map<int, State> want;
                     want[s + u] = Scalar(del(j, v)) * W2(i, w) -
                                   Scalar(del(i, w) *
                                          sg(I.pe(v, w) * I.pe(i, j))) *
                                       W2(v, j);
                     want[s + u - 1] =
                         Scalar(del(j, v) * s * (l - 1)) * a * W1(i, w) -
                         Scalar(del(v, w) * sg(I.p(w)) * (l - 1) * s) *
                             (Scalar(l) * c - Scalar(1)) * W1(i, j);
                     want[s + u - 2] = Scalar(binomial(s, 2) * l * (l - 1)) *
                                       a * kap(w, v, j, i) * vacuum(*alg);
                     for (int pw = s + u - 2; pw <= s + u; ++pw) {
                       State g = got.count(pw) ? got[pw] : State(alg.get());
                       State d = g - want[pw];
                       if (!d.is_zero())
                         return "t^" + std::to_string(pw) + ": " + d.str();
                     }
                     return std::string();
                   }});

  // Lemma 4.1: the xi map — gl(m|n) structure constants and level of the
  // W1 currents, matching the affine algebra with central charge l*alpha.
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int v = 1; v <= N; ++v)
        for (int w = 1; w <= N; ++w) {
          auto ids = idx({{"i", i}, {"j", j}, {"v", v}, {"w", w}});
          tasks.push_back({"ope/xi-struct " + ids, "Lemma 4.1", [=] {
                             State rhs =
                                 Scalar(del(j, v)) * W1(w, i) -
                                 Scalar(del(w, i) * sg(I.pe(i, j) * I.pe(v, w))) *
                                     W1(j, v);
                             return diff_str(nth_product(W1(j, i), 0, W1(w, v)),
                                             rhs);
                           }});
          tasks.push_back({"ope/xi-level " + ids, "Lemma 4.1", [=] {
                             Scalar lvl =
                                 Scalar(del(i, w) * del(j, v) * sg(I.p(i)) * l) *
                                     a -
                                 Scalar(del(i, j) * del(v, w) *
                                        sg(I.p(i) + I.p(v)) * l) *
                                     (Scalar(l) * c - Scalar(1));
                             return diff_str(nth_product(W1(j, i), 1, W1(w, v)),
                                             lvl * vacuum(*alg));
                           }});
          tasks.push_back({"ope/xi-higher " + ids, "Lemma 4.1 (s >= 2)", [=] {
                             for (int s = 2; s <= 4; ++s) {
                               State r = nth_product(W1(j, i), s, W1(w, v));
                               if (!r.is_zero()) return r.str();
                             }
                             return std::string();
                           }});
        }

  // Lemma 4.5: the (0)- and (1)-products of the diagonal W2.
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      auto ids = idx({{"i", i}, {"j", j}});
      Scalar pi(sg(I.p(i))), pj(sg(I.p(j))), dij(del(i, j));
      Scalar lm1(l - 1);
      Scalar ll1h{Rational(l * (l - 1), 2)};
      tasks.push_back({"ope/W2-0-W2 " + ids, "Lemma 4.5", [=] {
        State rhs =
            pi * nth_product(W1(i, j), -1, W2(j, i)) -
            pj * nth_product(W1(j, i), -1, W2(i, j)) -
            (dij * a + pi) * translate(W2(j, j)) +
            pj * lm1 * a * nth_product(W1(j, i), -1, translate(W1(i, j))) -
            cterm * nth_product(W1(j, j), -1, translate(W1(i, i))) +
            dij * ll1h * a * a * translate_pow(W1(i, i), 2) +
            pj * ll1h * a * translate_pow(W1(i, i), 2) -
            pj * Scalar(Rational(l * (l - 1) * (l - 1), 2)) * c * a *
                translate_pow(W1(i, i), 2) +
            Scalar(Rational(1, 2)) * pi * lm1 * a * translate_pow(W1(j, j), 2) -
            Scalar(Rational(1, 2)) * pj * lm1 * a * translate_pow(W1(i, i), 2);
        return diff_str(nth_product(W2(i, i), 0, W2(j, j)), rhs);
      }});
      tasks.push_back({"ope/W2-1-W2 " + ids, "Lemma 4.5", [=] {
        State rhs =
            Scalar(-1) * cterm * nth_product(W1(j, j), -1, W1(i, i)) -
            Scalar(2) * dij * a * W2(i, i) - pi * W2(j, j) - pj * W2(i, i) +
            pj * lm1 * a * nth_product(W1(j, i), -1, W1(i, j)) +
            dij * Scalar(l * (l - 1)) * a * a * translate(W1(i, i)) +
            pj * Scalar(l * (l - 1)) * a * translate(W1(i, i)) -
            pj * Scalar(l * (l - 1) * (l - 1)) * c * a * translate(W1(i, i)) +
            pi * lm1 * a * translate(W1(j, j)) - pj * lm1 * a * translate(W1(i, i));
        return diff_str(nth_product(W2(i, i), 1, W2(j, j)), rhs);
      }});
    }
  run_tasks(tasks, cfg.jobs, out);
}

// ---------------------------------------------------------------- appendix

void suite_appendix(const SuiteConfig& cfg, std::vector<CheckResult>& out) {
  if (cfg.inst.l < 2 || cfg.inst.N() < 2)
    throw ConfigError("appendix suite requires l >= 2 and m + n >= 2");
  auto alg = std::make_shared<Algebra>(cfg.inst, Algebra::Type::Amn);
  auto Wm = std::make_shared<std::map<std::string, State>>(
      load_or_build_W(*alg, cfg.cache));
  const Instance I = cfg.inst;
  int N = I.N(), l = I.l;
  Scalar a = Scalar::alpha();
  auto W1 = [Wm](int i, int j) -> const State& { return Wm->at(w_key(1, i, j)); };
  auto W2 = [Wm](int i, int j) -> const State& { return Wm->at(w_key(2, i, j)); };
  // F(r,u,v) = sum_{t=1}^{l-r} e_{(r+t-1)N+u,(t-1)N+v}[-1]: the f-centralizer
  // basis elements the appendix generates.
  auto F = [=](int r, int u, int v) {
    State s(alg.get());
    for (int t = 1; t <= l - r; ++t)
      s += gen_state(*alg,
                     Gen{Kind::Current, I.flat(r + t - 1, u), I.flat(t - 1, v)});
    return s;
  };
  // The adjudicated alpha coefficient of the triple-product claim: the
  // engine value is (r+1) alpha; the printed statement has alpha and the
  // printed proof derives r alpha, and both fail the exact check.  The named
  // mutation flips the sign to demonstrate suite sensitivity.
  int mut_sign = cfg.mutate == "appendix-t3-alpha-sign" ? -1 : 1;
  std::vector<Task> tasks;

  // Preparatory claim, part (1): exact 0-th products of leading-term sums.
  for (int w = 0; w <= l - 1; ++w)
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        for (int u = 1; u <= N; ++u)
          for (int v = 1; v <= N; ++v)
            tasks.push_back(
                {"appendix/T0-1 " + idx({{"w", w}, {"i", i}, {"j", j},
                                         {"u", u}, {"v", v}}),
                 "Appendix A, preparatory claim (1)", [=] {
                   State rhs =
                       Scalar(del(i, u)) * F(w + 1, j, v) -
                       Scalar(del(j, v) * sg(I.pe(i, j) * I.pe(u, v))) *
                           F(w + 1, u, i);
                   return diff_str(nth_product(F(1, j, i), 0, F(w, u, v)), rhs);
                 }});

  // Preparatory claim, part (2): exact 0-th products against W1.
  for (int r = 0; r <= l - 1; ++r)
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        for (int x = 1; x <= N; ++x)
          for (int y = 1; y <= N; ++y)
            tasks.push_back(
                {"appendix/T0-2 " + idx({{"r", r}, {"i", i}, {"j", j},
                                         {"x", x}, {"y", y}}),
                 "Appendix A, preparatory claim (2)", [=] {
                   State rhs =
                       Scalar(del(i, x)) * F(r, j, y) -
                       Scalar(del(j, y) * sg(I.pe(i, j) * I.pe(x, y))) *
                           F(r, x, i);
                   return diff_str(nth_product(W1(i, j), 0, F(r, x, y)), rhs);
                 }});

  // Generation claim, part (1): leading component of ((W2_ii)_(0))^r W1_{j,i}.
  for (int r = 0; r <= l - 1; ++r)
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        if (i == j) continue;
        tasks.push_back(
            {"appendix/T1-1 " + idx({{"r", r}, {"i", i}, {"j", j}}),
             "Appendix A, generation claim (1)", [=] {
               State cur = W1(j, i);
               for (int k = 0; k < r; ++k) cur = nth_product(W2(i, i), 0, cur);
               return diff_str(leading_component(cur), F(r, i, j));
             }});
      }

  // Generation claim, part (2): the diagonal difference.
  for (int r = 0; r <= l - 1; ++r)
    for (int i = 1; i <= N - 1; ++i)
      tasks.push_back(
          {"appendix/T1-2 " + idx({{"r", r}, {"i", i}}),
           "Appendix A, generation claim (2)", [=] {
             State cur = W1(i + 1, i);
             for (int k = 0; k < r; ++k) cur = nth_product(W2(i, i), 0, cur);
             cur = nth_product(W1(i, i + 1), 0, cur);
             State rhs =
                 F(r, i + 1, i + 1) - Scalar(sg(I.pe(i, i + 1))) * F(r, i, i);
             return diff_str(leading_component(cur), rhs);
           }});

  // Triple-product claim: leading component of
  // (W2_ii)_(1) (W1_{i,i+1})_(0) ((W2_ii)_(0))^r W1_{i+1,i}.
  for (int r = 1; r <= l - 1; ++r)
    for (int i = 1; i <= N - 1; ++i)
      tasks.push_back(
          {"appendix/T3 " + idx({{"r", r}, {"i", i}}),
           "Appendix A, triple-product claim", [=] {
             State cur = W1(i + 1, i);
             for (int k = 0; k < r; ++k) cur = nth_product(W2(i, i), 0, cur);
             cur = nth_product(W1(i, i + 1), 0, cur);
             cur = nth_product(W2(i, i), 1, cur);
             State rhs =
                 Scalar(mut_sign * sg(I.pe(i, i + 1)) * (r + 1)) * a *
                     F(r, i, i) +
                 Scalar(sg(I.p(i + 1)) * r) * F(r, i, i) -
                 Scalar(sg(I.p(i)) * r) * F(r, i + 1, i + 1);
             return diff_str(leading_component(cur), rhs);
           }});
  run_tasks(tasks, cfg.jobs, out);
}

// ------------------------------------------------------------- phi and ev

void relation_tasks(const std::string& prefix, const std::string& ref,
                    std::shared_ptr<const std::vector<YRelation>> rels,
                    std::shared_ptr<const Algebra> alg, int D,
                    std::vector<Task>& tasks,
                    std::vector<CheckResult>& skips) {
  for (size_t k = 0; k < rels->size(); ++k) {
    const YRelation& r = (*rels)[k];
    std::string id = prefix + "/" + r.id + " " + r.detail;
    if (r.degenerate) {
      CheckResult s;
      s.id = id;
      s.paper_ref = ref;
      s.status = "skip";
      s.residual =
          "outside the presentation hypothesis m, n >= 2: at n = 1 the corner "
          "node is adjacent to node 0 on both sides and this relation does "
          "not survive the degeneration";
      skips.push_back(std::move(s));
      continue;
    }
    tasks.push_back({id, ref, [rels, k, alg, D] {
                       State witness;
                       if (relation_holds((*rels)[k], *alg, D, &witness))
                         return std::string();
                       return witness.str();
                     }});
  }
}

void suite_phi(const SuiteConfig& cfg, std::vector<CheckResult>& out) {
  int m = cfg.inst.m, n = cfg.inst.n;
  bool ok = cfg.inst.l >= 2 &&
            ((n == 0 && m >= 3) || (m != n && m >= 2 && n >= 2));
  if (!ok)
    throw ConfigError(
        "phi suite requires l >= 2 and (m, n >= 2 with m != n, or n = 0 with "
        "m >= 3)");
  // c = 0 is a hypothesis of the homomorphism theorem.
  auto alg = std::make_shared<Algebra>(cfg.inst, Algebra::Type::Amn);
  alg->set_c_zero(true);
  auto W = extract_W(*alg);
  auto memo = std::make_shared<ModeMemo>();
  PhiOptions opt;
  if (cfg.mutate == "phi-x0p1-alpha") opt.mutate = cfg.mutate;
  auto yi = std::make_shared<YangianImages>(YangianImages::phi(*alg, W, opt));
  // Parameters of the main theorem: eps1 = alpha/(m-n), eps2 = -1 - eps1,
  // hence hbar = -1 and eps = (m-n) + alpha.
  Scalar hbar(-1);
  Scalar eps = Scalar(m - n) + Scalar::alpha();
  Scalar eps1 = Scalar::alpha().div(m - n);
  Scalar eps2 = Scalar(-1) - eps1;
  auto upper = std::make_shared<const std::vector<YRelation>>(
      uppercase_relations(*yi, hbar, eps, memo.get()));
  auto lower = std::make_shared<const std::vector<YRelation>>(
      lowercase_relations(*yi, eps1, eps2, memo.get()));
  std::vector<Task> tasks;
  std::string ref = n == 0 ? "non-super presentation (Prop. 2.3 analogue)"
                           : "Prop. 2.3";
  std::string lref = n == 0 ? "non-super presentation (Thm 2.2 analogue)"
                            : "Thm 2.2 via the Psi translation";
  relation_tasks("phi-upper", ref, upper, alg, cfg.cutoff, tasks, out);
  relation_tasks("phi-lower", lref, lower, alg, cfg.cutoff, tasks, out);
  run_tasks(tasks, cfg.jobs, out);
  // Keep the images and memo alive until the tasks are done.
  (void)yi;
  (void)memo;
}

void suite_ev(const SuiteConfig& cfg, std::vector<CheckResult>& out) {
  int m = cfg.inst.m, n = cfg.inst.n;
  if (m == n || m + n < 2)
    throw ConfigError("ev suite requires m != n and m + n >= 2");
  Instance I{m, n, 1};
  std::string mut = cfg.mutate == "ev-h01-ctilde" ? cfg.mutate : "";

  // Rational sample point (eps1, eps2) = (1, 1).
  {
    auto alg = std::make_shared<Algebra>(I, Algebra::Type::GlHat);
    Scalar hbar(2), ctilde{Rational(n - m, 2)};
    alg->set_ctilde(ctilde);
    auto memo = std::make_shared<ModeMemo>();
    auto yi = std::make_shared<YangianImages>(
        YangianImages::ev(*alg, EvOptions{hbar, ctilde, mut}));
    Scalar eps(n - m);  // -(m-n) eps2 at eps2 = 1
    auto upper = std::make_shared<const std::vector<YRelation>>(
        uppercase_relations(*yi, hbar, eps, memo.get()));
    auto lower = std::make_shared<const std::vector<YRelation>>(
        lowercase_relations(*yi, Scalar(1), Scalar(1), memo.get()));
    std::vector<Task> tasks;
    relation_tasks("ev-num-upper", "Thm 2.4 + Prop. 2.3", upper, alg,
                   cfg.cutoff, tasks, out);
    relation_tasks("ev-num-lower", "Thm 2.4 + Thm 2.2", lower, alg,
                   cfg.cutoff, tasks, out);
    run_tasks(tasks, cfg.jobs, out);
  }

  // Symbolic run: eps2 = 1 - eps1 keeps hbar = 1 and every coefficient
  // polynomial in eps1.
  {
    auto alg = std::make_shared<Algebra>(I, Algebra::Type::GlHat);
    Scalar hbar(1);
    Scalar ctilde = Scalar(n - m) * Scalar::eps();
    alg->set_ctilde(ctilde);
    auto memo = std::make_shared<ModeMemo>();
    auto yi = std::make_shared<YangianImages>(
        YangianImages::ev(*alg, EvOptions{hbar, ctilde, mut}));
    Scalar eps = Scalar(m - n) * (Scalar::eps() - Scalar(1));
    auto upper = std::make_shared<const std::vector<YRelation>>(
        uppercase_relations(*yi, hbar, eps, memo.get()));
    auto lower = std::make_shared<const std::vector<YRelation>>(
        lowercase_relations(*yi, Scalar::eps(), Scalar(1) - Scalar::eps(),
                            memo.get()));
    std::vector<Task> tasks;
    relation_tasks("ev-sym-upper", "Thm 2.4 + Prop. 2.3", upper, alg,
                   cfg.cutoff, tasks, out);
    relation_tasks("ev-sym-lower", "Thm 2.4 + Thm 2.2", lower, alg,
                   cfg.cutoff, tasks, out);
    run_tasks(tasks, cfg.jobs, out);
  }
}

void dispatch(const std::string& suite, const SuiteConfig& cfg,
              std::vector<CheckResult>& out) {
  if (suite == "gen") suite_gen(cfg, out);
  else if (suite == "d0") suite_d0(cfg, out);
  else if (suite == "ope") suite_ope(cfg, out);
  else if (suite == "phi") suite_phi(cfg, out);
  else if (suite == "ev") suite_ev(cfg, out);
  else if (suite == "appendix") suite_appendix(cfg, out);
  else throw ConfigError("unknown suite: " + suite);
}

}  // namespace

std::vector<std::string> known_mutations() {
  return {"gen-w2-depth2-coeff", "d0-drop-ghost-shift", "ope-lem4-c-coeff",
          "phi-x0p1-alpha",      "ev-h01-ctilde",       "appendix-t3-alpha-sign"};
}

int min_grade(const State& u) {
  const Instance& I = u.alg()->inst();
  int best = 1 << 28;
  for (const auto& [w, c] : u.terms()) {
    int g = 0;
    for (const auto& L : w) g += I.grade(L.gen.row, L.gen.col);
    best = std::min(best, g);
  }
  return best;
}

State leading_component(const State& u) {
  if (u.is_zero()) return u;
  const Instance& I = u.alg()->inst();
  int best = min_grade(u);
  State r(u.alg());
  for (const auto& [w, c] : u.terms()) {
    int g = 0;
    for (const auto& L : w) g += I.grade(L.gen.row, L.gen.col);
    if (g == best) r.add(w, c);
  }
  return r;
}

std::map<std::string, State> load_or_build_W(const Algebra& alg,
                                             const std::string& cache) {
  // Caches hold the symbolic-c states; a c = 0 algebra always rebuilds.
  if (!cache.empty() && !alg.c_zero() && std::filesystem::exists(cache)) {
    try {
      Json j = read_json_file(cache);
      if (j.value("engine_version", 0) == 1) {
        WCache w = wcache_from_json(j, alg);
        bool ok = true;
        for (int r = 1; r <= alg.inst().l && ok; ++r) {
          auto it = w.entries.find(w_key(r, 1, 1));
          ok = it != w.entries.end() && d0_apply(it->second).is_zero();
        }
        if (ok) return w.entries;
      }
    } catch (const std::exception&) {
      // fall through to a rebuild
    }
  }
  auto W = extract_W(alg);
  if (!cache.empty() && !alg.c_zero())
    write_json_file(cache, wcache_to_json(WCache{alg.inst(), W}));
  return W;
}

SuiteReport run_suite(const std::string& suite, const SuiteConfig& cfg) {
  if (!cfg.mutate.empty()) {
    auto ms = known_mutations();
    if (std::find(ms.begin(), ms.end(), cfg.mutate) == ms.end())
      throw ConfigError("unknown mutation: " + cfg.mutate);
  }
  if (cfg.inst.m < 0 || cfg.inst.n < 0 || cfg.inst.N() < 1 || cfg.inst.l < 1)
    throw ConfigError("invalid instance");
  if (cfg.cutoff < 0) throw ConfigError("cutoff must be >= 0");
  SuiteReport rep;
  rep.suite = suite;
  rep.cfg = cfg;
  if (suite == "all") {
    for (const char* s :
         {"gen", "d0", "ope", "phi", "ev", "appendix"}) {
      try {
        dispatch(s, cfg, rep.checks);
      } catch (const ConfigError& e) {
        CheckResult c;
        c.id = std::string(s) + "/hypothesis";
        c.paper_ref = "theorem hypotheses";
        c.status = "skip";
        c.residual = e.what();
        rep.checks.push_back(std::move(c));
      }
    }
  } else {
    dispatch(suite, cfg, rep.checks);
  }
  std::stable_sort(
      rep.checks.begin(), rep.checks.end(),
      [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return rep;
}

}  // namespace wsa
