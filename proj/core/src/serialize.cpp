#include "wsa/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace wsa {

namespace {

std::string mono_key(const Scalar::Mono& m) {
  std::ostringstream os;
  os << m[0] << "," << m[1] << "," << m[2];
  return os.str();
}

Scalar::Mono parse_mono(const std::string& key) {
  Scalar::Mono m{};
  std::istringstream is(key);
  char comma;
  if (!(is >> m[0] >> comma >> m[1] >> comma >> m[2]))
    throw std::runtime_error("bad monomial key: " + key);
  return m;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  Json j = Json::object();
  for (const auto& [m, q] : s.terms()) j[mono_key(m)] = q.get_str();
  return j;
}

Scalar scalar_from_json(const Json& j) {
  Scalar s;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Rational q(it.value().get<std::string>());
    q.canonicalize();
    s.set_term(parse_mono(it.key()), q);
  }
  return s;
}

Json state_to_json(const State& s) {
  Json terms = Json::array();
  for (const auto& [w, c] : s.terms()) {
    Json word = Json::array();
    for (const auto& L : w) {
      word.push_back({{"kind", L.gen.kind == Kind::Current ? "J" : "psi"},
                      {"row", L.gen.row},
                      {"col", L.gen.col},
                      {"depth", L.depth}});
    }
    terms.push_back({{"coeff", scalar_to_json(c)}, {"word", word}});
  }
  return terms;
}

State state_from_json(const Json& j, const Algebra& alg) {
  State s(&alg);
  for (const auto& term : j) {
    Word w;
    for (const auto& lj : term.at("word")) {
      std::string kind = lj.at("kind").get<std::string>();
      Gen g{kind == "J" ? Kind::Current : Kind::Ghost, lj.at("row").get<int>(),
            lj.at("col").get<int>()};
      w.push_back(Letter{g, lj.at("depth").get<int>()});
    }
    s.add(w, scalar_from_json(term.at("coeff")));
  }
  return s;
}

Json wcache_to_json(const WCache& w) {
  Json j;
  j["m"] = w.inst.m;
  j["n"] = w.inst.n;
  j["l"] = w.inst.l;
  j["engine_version"] = 1;
  Json e = Json::object();
  for (const auto& [key, st] : w.entries) e[key] = state_to_json(st);
  j["W"] = e;
  return j;
}

WCache wcache_from_json(const Json& j, const Algebra& alg) {
  WCache w;
  w.inst = Instance{j.at("m").get<int>(), j.at("n").get<int>(),
                    j.at("l").get<int>()};
  const Instance& ai = alg.inst();
  if (w.inst.m != ai.m || w.inst.n != ai.n || w.inst.l != ai.l)
    throw std::runtime_error("cache instance mismatch");
  for (auto it = j.at("W").begin(); it != j.at("W").end(); ++it)
    w.entries.emplace(it.key(), state_from_json(it.value(), alg));
  return w;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace wsa
