#include "tiltkit/fixtures.hpp"

#include <cctype>

#include "tiltkit/error.hpp"
#include "tiltkit/homological.hpp"

namespace tiltkit {

namespace {

QuiverPresentation make(const std::string& name, std::vector<std::string> vertices, std::vector<QuiverArrow> arrows) {
  QuiverPresentation p;
  p.name = name;
  p.quiver.vertices = std::move(vertices);
  p.quiver.arrows = std::move(arrows);
  return p;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::vector<std::string> fixture_names() { return {"example1", "star3", "a2", "serial3", "a3"}; }

bool is_fixture(const std::string& name) {
  for (const auto& n : fixture_names())
    if (n == name) return true;
  return false;
}

QuiverPresentation fixture_presentation(const std::string& name, const Field& f) {
  Scalar one(f, 1), minus(f, -1);
  if (name == "example1") {
    auto p = make(name, {"1"}, {{"x", "1", "1"}, {"y", "1", "1"}});
    p.relations = {{{one, {"x", "x"}}}, {{one, {"y", "y"}}}, {{one, {"x", "y"}}, {minus, {"y", "x"}}}};
    return p;
  }
  if (name == "star3") return make(name, {"1", "2", "3"}, {{"a", "2", "1"}, {"b", "3", "1"}});
  if (name == "a2") return make(name, {"1", "2"}, {{"a", "1", "2"}});
  if (name == "serial3") {
    auto p = make(name, {"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
    p.relations = {{{one, {"a", "b"}}}};
    return p;
  }
  if (name == "a3") return make(name, {"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  throw InputError("unknown fixture '" + name + "'");
}

AlgebraPtr fixture_algebra(const std::string& name, const Field& f) {
  return build_algebra(f, fixture_presentation(name, f));
}

Representation builtin_module(const AlgebraPtr& alg, const std::string& raw) {
  std::string expr = trim(raw);
  auto wrapped = [&](const std::string& head) -> std::optional<std::string> {
    if (expr.size() > head.size() + 1 && expr.compare(0, head.size() + 1, head + "(") == 0 && expr.back() == ')')
      return expr.substr(head.size() + 1, expr.size() - head.size() - 2);
    return std::nullopt;
  };
  if (auto inner = wrapped("tau")) return tau(builtin_module(alg, *inner));
  if (auto inner = wrapped("tauinv")) return tau_inverse(builtin_module(alg, *inner));
  if (expr.rfind("Omega", 0) == 0) {
    std::size_t open = expr.find('(');
    if (open != std::string::npos && expr.back() == ')') {
      std::string power = expr.substr(5, open - 5);
      if (!power.empty() && power[0] == '^') power = power.substr(1);
      int k = power.empty() ? 1 : std::stoi(power);
      Representation inner = builtin_module(alg, expr.substr(open + 1, expr.size() - open - 2));
      return syzygy_power(inner, k).with_label(expr);
    }
  }
  if (expr == "A") return Representation::regular(alg).with_label("A");
  if (expr == "N") return radical_submodule(Representation::regular(alg)).module.with_label("N");
  if (expr == "D(A)") {
    std::vector<Representation> parts;
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) parts.push_back(injective_module(alg, v));
    return direct_sum_module(alg, parts).with_label("D(A)");
  }
  if (expr == "Y") return simple_module(alg, 0).with_label("Y");
  if (expr == "X") return syzygy_power(simple_module(alg, 0), 2).with_label("X");
  if (expr.size() >= 2 && (expr[0] == 'S' || expr[0] == 'P' || expr[0] == 'I')) {
    const auto& pres = alg->presentation();
    std::string vname = expr.substr(1);
    std::size_t v = 0;
    if (pres) {
      v = pres->quiver.vertex_index(vname);
    } else {
      std::size_t pos = 0;
      v = std::stoul(vname, &pos);
      if (pos != vname.size() || v >= alg->vertex_count()) throw InputError("unknown vertex in '" + expr + "'");
    }
    if (expr[0] == 'S') return simple_module(alg, v).with_label(expr);
    if (expr[0] == 'P') return vertex_projective(alg, v).module.with_label(expr);
    return injective_module(alg, v).with_label(expr);
  }
  throw InputError("unknown module expression '" + expr + "'");
}

Example1Data example1_data(const Field& f, std::uint64_t seed) {
  Example1Data d;
  d.algebra = fixture_algebra("example1", f);
  d.y = builtin_module(d.algebra, "Y");
  d.n = builtin_module(d.algebra, "N");
  d.sequence = ar_sequence(d.y, seed);
  d.sequence.target = {d.n};
  d.sequence.terms[0] = d.sequence.terms[0].with_label("X");
  d.sequence.maps[0] = Morphism(d.sequence.terms[0], d.sequence.terms[1], d.sequence.maps[0].matrix());
  d.x = d.sequence.x();
  return d;
}

SequenceData builtin_ar_sequence(const AlgebraPtr& alg, const std::string& expr, std::uint64_t seed) {
  return ar_sequence(builtin_module(alg, expr), seed);
}

SequenceData a2_broken_sequence(const Field& f, std::uint64_t seed) {
  AlgebraPtr alg = fixture_algebra("a2", f);
  SequenceData s = builtin_ar_sequence(alg, "S1", seed);
  s.target = {builtin_module(alg, "P1"), builtin_module(alg, "S1")};
  return s;
}

}  // namespace tiltkit
