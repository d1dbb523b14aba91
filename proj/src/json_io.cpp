#include "tiltkit/json_io.hpp"

#include <fstream>

#include "tiltkit/error.hpp"

namespace tiltkit::io {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

Field parse_field(const json& j) {
  if (j.is_string()) return Field::parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) throw InputError("field must be {\"kind\": \"gf\"|\"rational\"}");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return Field::rational();
  if (kind == "gf") return Field::prime(j.value("p", static_cast<std::uint64_t>(kDefaultPrime)));
  throw InputError("unknown field kind '" + kind + "'");
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return json{{"kind", "rational"}};
  return json{{"kind", "gf"}, {"p", f.characteristic()}};
}

Field presentation_field(const json& j) {
  return j.contains("field") ? parse_field(j.at("field")) : Field::prime(kDefaultPrime);
}

QuiverPresentation parse_presentation(const json& j, const Field& f) {
  try {
    QuiverPresentation p;
    p.name = j.value("name", std::string("algebra"));
    const json& q = j.at("quiver");
    for (const auto& v : q.at("vertices")) p.quiver.vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    if (q.contains("arrows"))
      for (const auto& a : q.at("arrows")) {
        auto name_of = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
        p.quiver.arrows.push_back({a.at("name").get<std::string>(), name_of(a.at("from")), name_of(a.at("to"))});
      }
    for (const auto& a : p.quiver.arrows) {
      p.quiver.vertex_index(a.from);
      p.quiver.vertex_index(a.to);
    }
    if (j.contains("relations"))
      for (const auto& rel : j.at("relations")) {
        Relation r;
        for (const auto& term : rel) {
          const json& c = term.at("coeff");
          Scalar coeff = c.is_string() ? Scalar::parse(f, c.get<std::string>()) : Scalar(f, c.get<long>());
          std::vector<std::string> path;
          for (const auto& a : term.at("path")) path.push_back(a.get<std::string>());
          r.push_back({coeff, path});
        }
        p.relations.push_back(std::move(r));
      }
    return p;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed algebra: ") + e.what());
  }
}

json presentation_to_json(const QuiverPresentation& p, const Field& f) {
  json arrows = json::array();
  for (const auto& a : p.quiver.arrows) arrows.push_back({{"name", a.name}, {"from", a.from}, {"to", a.to}});
  json rels = json::array();
  for (const auto& r : p.relations) {
    json terms = json::array();
    for (const auto& t : r) terms.push_back({{"coeff", t.coeff.to_string()}, {"path", t.path}});
    rels.push_back(terms);
  }
  return json{{"name", p.name},
              {"field", field_to_json(f)},
              {"quiver", {{"vertices", p.quiver.vertices}, {"arrows", arrows}}},
              {"relations", rels}};
}

Matrix parse_matrix(const json& j, const Field& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  if (rows == 0 || cols == 0) return m;
  if (!j.is_array() || j.size() != rows) throw InputError("matrix needs " + std::to_string(rows) + " rows");
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols) throw InputError("matrix row needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const json& e = row[c];
      if (e.is_string()) m.set(r, c, Scalar::parse(f, e.get<std::string>()));
      else if (e.is_number_integer()) m.set(r, c, Scalar(f, e.get<long>()));
      else throw InputError("matrix entries must be integers or strings");
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    out.push_back(row);
  }
  return out;
}

Representation parse_module(const json& j, const AlgebraPtr& alg) {
  try {
    const Field& f = alg->field();
    std::string label = j.value("label", std::string());
    if (j.contains("dims")) {
      const auto& pres = alg->presentation();
      if (!pres) throw InputError("quiver-form module over an algebra without presentation");
      std::map<std::string, std::size_t> dims;
      for (auto it = j.at("dims").begin(); it != j.at("dims").end(); ++it) dims[it.key()] = it.value().get<std::size_t>();
      std::map<std::string, Matrix> arrows;
      if (j.contains("action"))
        for (auto it = j.at("action").begin(); it != j.at("action").end(); ++it) {
          const auto& arrow = pres->quiver.arrows[pres->quiver.arrow_index(it.key())];
          std::size_t rows = dims.count(arrow.to) ? dims[arrow.to] : 0;
          std::size_t cols = dims.count(arrow.from) ? dims[arrow.from] : 0;
          arrows[it.key()] = parse_matrix(it.value(), f, rows, cols);
        }
      return Representation::from_quiver(alg, dims, arrows, label);
    }
    std::size_t n = j.at("dimension").get<std::size_t>();
    std::vector<Matrix> actions;
    const json& act = j.at("action");
    for (std::size_t i = 0; i < alg->dim(); ++i) {
      const std::string& l = alg->labels()[i];
      if (!act.contains(l)) throw InputError("generic module lacks the action of '" + l + "'");
      actions.push_back(parse_matrix(act.at(l), f, n, n));
    }
    return Representation::from_basis_actions(alg, actions, label);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed module: ") + e.what());
  }
}

json module_to_json(const Representation& m, const std::string& algebra_id) {
  const AlgebraPtr& alg = m.algebra();
  const auto& pres = alg->presentation();
  json out;
  out["algebra"] = algebra_id;
  if (!m.label().empty()) out["label"] = m.label();
  if (pres) {
    json dims = json::object();
    for (std::size_t v = 0; v < pres->quiver.vertices.size(); ++v) dims[pres->quiver.vertices[v]] = m.dim_vector()[v];
    json act = json::object();
    const auto& off = m.vertex_offsets();
    const auto& vd = m.dim_vector();
    for (std::size_t g = 0; g < alg->generators().size(); ++g) {
      const Generator& gen = alg->generators()[g];
      if (gen.kind != Generator::Kind::arrow) continue;
      Matrix full = m.coframe() * m.gen_action(g) * m.frame();
      act[gen.label] = matrix_to_json(full.block(off[gen.target], off[gen.source], vd[gen.target], vd[gen.source]));
    }
    out["dims"] = dims;
    out["action"] = act;
  } else {
    out["dimension"] = m.dim();
    json act = json::object();
    for (std::size_t i = 0; i < alg->dim(); ++i) act[alg->labels()[i]] = matrix_to_json(m.basis_action(i));
    out["action"] = act;
  }
  return out;
}

Matrix morphism_in_frames(const Morphism& f) {
  if (!f.source().algebra()->presentation()) return f.matrix();
  return f.target().coframe() * f.matrix() * f.source().frame();
}

SequenceData parse_sequence(const json& j, const AlgebraPtr& alg, const ModuleResolver& resolve) {
  try {
    SequenceData s;
    std::string kind = j.value("kind", std::string("almost-dsplit"));
    if (kind == "almost-dsplit") s.kind = SequenceKind::almost_dsplit;
    else if (kind == "chain") s.kind = SequenceKind::chain;
    else throw InputError("unknown sequence kind '" + kind + "'");
    auto module_of = [&](const json& x) { return x.is_string() ? resolve(x.get<std::string>()) : parse_module(x, alg); };
    for (const auto& t : j.at("terms")) s.terms.push_back(module_of(t));
    const json& maps = j.at("maps");
    if (maps.size() + 1 != s.terms.size()) throw InputError("malformed chain: need one map between consecutive terms");
    for (std::size_t i = 0; i < maps.size(); ++i)
      s.maps.push_back(Morphism(s.terms[i], s.terms[i + 1],
                                parse_matrix(maps[i], alg->field(), s.terms[i + 1].dim(), s.terms[i].dim())));
    if (j.contains("target")) {
      const json& t = j.at("target");
      if (t.is_array())
        for (const auto& x : t) s.target.push_back(module_of(x));
      else
        s.target.push_back(module_of(t));
    } else {
      for (std::size_t i = 1; i + 1 < s.terms.size(); ++i) s.target.push_back(s.terms[i]);
    }
    s.check_chain();
    return s;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed sequence: ") + e.what());
  }
}

json sequence_to_json(const SequenceData& s, const std::string& algebra_id) {
  json out;
  out["kind"] = s.kind == SequenceKind::almost_dsplit ? "almost-dsplit" : "chain";
  json target = json::array();
  for (const auto& t : s.target) target.push_back(module_to_json(t, algebra_id));
  out["target"] = target;
  json terms = json::array();
  for (const auto& t : s.terms) terms.push_back(module_to_json(t, algebra_id));
  out["terms"] = terms;
  json maps = json::array();
  for (const auto& m : s.maps) maps.push_back(matrix_to_json(morphism_in_frames(m)));
  out["maps"] = maps;
  return out;
}

json report_to_json(const VerificationReport& r) {
  json clauses = json::array();
  for (const auto& c : r.clauses) {
    json cl{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) cl["detail"] = c.detail;
    if (c.witness) cl["witness"] = matrix_to_json(c.witness->matrix());
    clauses.push_back(cl);
  }
  return json{{"ok", r.ok()}, {"clauses", clauses}};
}

namespace {

json dimension_to_json(const Dimension& d) {
  if (d.value) return *d.value;
  if (d.infinite) return "infinite";
  return d.to_string();
}

}  // namespace

json invariants_to_json(const AlgebraInvariants& a) {
  return json{{"name", a.name},
              {"dim", a.dim},
              {"simples", a.simples},
              {"cartan", a.cartan},
              {"cartan_det", a.cartan_det.get_str()},
              {"gl_dim", dimension_to_json(a.gl_dim)},
              {"ext1", a.ext1},
              {"arrows", a.arrows}};
}

json comparison_to_json(const Comparison& c) {
  json gap = c.gl_gap ? json(*c.gl_gap) : json("undefined");
  return json{{"verdicts", {{"simples_equal", c.simples_equal}, {"cartan_det_equal", c.det_equal}, {"gl_dim_gap_ok", c.gap_ok}}},
              {"gl_dim_gap", gap},
              {"mismatches", c.mismatches},
              {"notes", c.notes},
              {"ok", c.ok()}};
}

json certificate_to_json(const TiltingCertificate& c, const EndoIso* iso) {
  json out;
  out["n"] = c.n;
  out["lambda_dim"] = c.lambda.algebra->dim();
  out["lambda_summands"] = c.lambda.summands.size();
  out["T_dim"] = c.module().dim();
  json star = json::array();
  for (const auto& t : c.star_terms) star.push_back(t.module.dim());
  out["star_dims"] = star;
  out["star_exact"] = c.star_exact;
  if (c.checks) {
    out["pd_T"] = dimension_to_json(c.checks->pd);
    out["ext_T_T"] = c.checks->ext;
    json core = json::array();
    for (const auto& m : c.checks->coresolution) core.push_back(m.dim());
    out["coresolution_dims"] = core;
    out["tilting_report"] = report_to_json(c.checks->report);
  }
  out["verdict"] = c.verdict;
  if (iso) {
    out["endo"] = json{{"dim_End_T", iso->end_t.dim()},
                       {"dim_End_W", iso->end_w.dim()},
                       {"dim_E", iso->e_dim},
                       {"dim_I", iso->i_dim},
                       {"dim_Ebar", iso->ebar_dim},
                       {"dim_Ibar", iso->ibar_dim},
                       {"cartan_T", iso->cartan_t},
                       {"cartan_W", iso->cartan_w},
                       {"cartan_match", iso->cartan_match},
                       {"report", report_to_json(iso->report)}};
  }
  return out;
}

json bb_to_json(const BBTiltingSpec& b) {
  json out{{"n", b.n}, {"cond_a", b.cond_a}, {"cond_b", b.cond_b}, {"apr", b.apr}, {"report", report_to_json(b.report)}};
  if (!b.alternative.clauses.empty()) out["alternative"] = report_to_json(b.alternative);
  if (b.simple) out["simple_dim"] = b.simple->dim();
  if (b.translate) out["translate_dim"] = b.translate->dim();
  if (b.tilting) out["tilting_dim"] = b.tilting->dim();
  return out;
}

}  // namespace tiltkit::io
