// tiltkit command line: algebra checks, AR sequences, tilting certificates
// and invariant comparisons. Exit codes: 0 verified, 1 verification negative,
// 2 input error, 3 cap exceeded.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tiltkit/approx.hpp"
#include "tiltkit/decompose.hpp"
#include "tiltkit/endalgebra.hpp"
#include "tiltkit/error.hpp"
#include "tiltkit/fixtures.hpp"
#include "tiltkit/homological.hpp"
#include "tiltkit/invariants.hpp"
#include "tiltkit/json_io.hpp"
#include "tiltkit/tilting.hpp"

namespace fs = std::filesystem;
using namespace tiltkit;
using io::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kCap = 3 };

struct Options {
  std::string field;
  std::uint64_t seed = 0;
  std::size_t cap = 0;
  bool json = false;
  int threads = 0;

  std::size_t dim_cap() const { return cap ? cap : kDefaultDimensionCap; }
  std::size_t closure_cap() const { return cap ? cap : kDefaultClosureCap; }
};

Options opt;

// Output is either a JSON document or plain lines, never both.
struct Output {
  json doc = json::object();
  std::vector<std::string> lines;

  void line(const std::string& s) { lines.push_back(s); }
  int finish(int code) {
    if (opt.json)
      std::cout << doc.dump(2) << "\n";
    else
      for (const auto& l : lines) std::cout << l << "\n";
    return code;
  }
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string cartan_text(const std::vector<std::vector<long>>& c) {
  std::vector<std::string> rows;
  for (const auto& r : c) {
    std::vector<std::string> e;
    for (long x : r) e.push_back(std::to_string(x));
    rows.push_back(join(e, " "));
  }
  return "[" + join(rows, "; ") + "]";
}

std::string strip_suffix(std::string s) {
  s = fs::path(s).filename().string();
  for (const char* suf : {".alg.json", ".alg", ".json"}) {
    std::string x(suf);
    if (s.size() > x.size() && s.compare(s.size() - x.size(), x.size(), x) == 0) return s.substr(0, s.size() - x.size());
  }
  return s;
}

struct LoadedAlgebra {
  std::string id;
  AlgebraPtr alg;
};

// A JSON file, or the name of a bundled fixture. A non-admissible ideal is an
// input error here, not a cap outcome.
LoadedAlgebra load_algebra(const std::string& arg) {
  LoadedAlgebra la;
  std::optional<Field> over;
  if (!opt.field.empty()) over = Field::parse(opt.field);
  try {
    if (fs::is_regular_file(arg)) {
      json j = io::load_json_file(arg);
      Field f = over ? *over : io::presentation_field(j);
      QuiverPresentation p = io::parse_presentation(j, f);
      la.id = strip_suffix(arg);
      la.alg = build_algebra(f, p, opt.closure_cap());
      return la;
    }
    la.id = strip_suffix(arg);
    if (!is_fixture(la.id)) throw InputError("no algebra file or fixture named '" + arg + "'");
    Field f = over ? *over : Field::prime(kDefaultPrime);
    la.alg = build_algebra(f, fixture_presentation(la.id, f), opt.closure_cap());
    return la;
  } catch (const CapExceeded& e) {
    throw InputError(e.what());
  }
}

Representation load_module(const AlgebraPtr& alg, const std::string& arg, const fs::path& base = {}) {
  fs::path p(arg);
  if (!base.empty() && p.is_relative() && fs::is_regular_file(base / p)) p = base / p;
  if (fs::is_regular_file(p)) return io::parse_module(io::load_json_file(p.string()), alg);
  return builtin_module(alg, arg);
}

std::vector<Representation> load_module_list(const AlgebraPtr& alg, const std::string& list) {
  std::vector<Representation> out;
  for (const auto& item : split(list, ','))
    if (!item.empty()) out.push_back(load_module(alg, item));
  if (out.empty()) throw InputError("empty module list");
  return out;
}

SequenceData split_sequence(const Representation& x, const Representation& y) {
  const AlgebraPtr& alg = x.algebra();
  DirectSum mid = direct_sum(alg, {x, y});
  SequenceData s;
  s.terms = {x, mid.module, y};
  s.maps = {mid.inclusions[0], mid.projections[1]};
  s.target = {x, y};
  return s;
}

SequenceData chain_sequence(const AlgebraPtr& alg, const std::string& expr, std::size_t k) {
  if (k == 0) throw InputError("chain length must be positive");
  std::vector<SequenceData> list{builtin_ar_sequence(alg, expr, opt.seed)};
  for (std::size_t i = 1; i < k; ++i) list.push_back(ar_sequence(list.back().x(), opt.seed));
  return splice_chain(list, opt.seed).chain;
}

// A JSON file or a builtin: example1, ar:<expr>, a2-broken, split:<x>,<y>, chain:<expr>:<k>.
SequenceData load_sequence(const AlgebraPtr& alg, const std::string& arg) {
  if (fs::is_regular_file(arg)) {
    fs::path base = fs::path(arg).parent_path();
    return io::parse_sequence(io::load_json_file(arg), alg,
                              [&](const std::string& id) { return load_module(alg, id, base); });
  }
  if (arg == "example1") {
    SequenceData s = builtin_ar_sequence(alg, "Y", opt.seed);
    s.target = {builtin_module(alg, "N")};
    return s;
  }
  if (arg.rfind("ar:", 0) == 0) return builtin_ar_sequence(alg, arg.substr(3), opt.seed);
  if (arg == "a2-broken") {
    SequenceData s = builtin_ar_sequence(alg, "S1", opt.seed);
    s.target = {builtin_module(alg, "P1"), builtin_module(alg, "S1")};
    return s;
  }
  if (arg.rfind("split:", 0) == 0) {
    auto parts = split(arg.substr(6), ',');
    if (parts.size() != 2) throw InputError("split sequence needs two modules: split:<x>,<y>");
    return split_sequence(builtin_module(alg, parts[0]), builtin_module(alg, parts[1]));
  }
  if (arg.rfind("chain:", 0) == 0) {
    std::string rest = arg.substr(6);
    std::size_t colon = rest.rfind(':');
    if (colon == std::string::npos) throw InputError("chain sequence needs chain:<expr>:<k>");
    return chain_sequence(alg, rest.substr(0, colon), std::stoul(rest.substr(colon + 1)));
  }
  throw InputError("no sequence file or builtin named '" + arg + "'");
}

std::vector<std::string> dims_of(const std::vector<Representation>& mods) {
  std::vector<std::string> out;
  for (const auto& m : mods) out.push_back(std::to_string(m.dim()));
  return out;
}

void report_lines(Output& out, const VerificationReport& r) {
  for (const auto& c : r.clauses)
    out.line("  " + std::string(c.ok ? "ok   " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail));
}

EndAlgebra end_of(const std::vector<Representation>& mods, const std::string& name) {
  std::vector<Representation> parts;
  for (const auto& m : mods)
    for (auto& s : indecomposable_summands(m, opt.seed)) parts.push_back(s);
  return end_algebra(parts, name);
}

void invariant_lines(Output& out, const std::string& title, const AlgebraInvariants& inv) {
  out.line(title + ": dim " + std::to_string(inv.dim) + ", simples " + std::to_string(inv.simples) + ", Cartan " +
           cartan_text(inv.cartan) + ", det " + inv.cartan_det.get_str() + ", gl.dim " + inv.gl_dim.to_string() +
           ", arrows " + std::to_string(inv.arrows));
}

// ---- commands ----

int cmd_check_algebra(const std::string& file) {
  Output out;
  LoadedAlgebra la = load_algebra(file);
  const AlgebraTable& a = *la.alg;
  if (!a.check_associative() || !a.check_unit()) throw InputError("structure constants are not a unital associative algebra");
  auto c = cartan_matrix(a);
  mpz_class det = integer_determinant(c);
  out.line("dim " + std::to_string(a.dim()) + ", rad " + std::to_string(a.radical().cols()) + ", Cartan " +
           cartan_text(c) + ", det " + det.get_str());
  out.line("field " + a.field().name() + ", vertices " + std::to_string(a.vertex_count()));
  out.line("basis " + join(a.labels(), " "));
  out.doc = json{{"algebra", la.id},
                 {"field", io::field_to_json(a.field())},
                 {"dim", a.dim()},
                 {"basis_size", a.labels().size()},
                 {"basis", a.labels()},
                 {"rad_dim", a.radical().cols()},
                 {"vertices", a.vertex_count()},
                 {"cartan", c},
                 {"cartan_det", det.get_str()}};
  return out.finish(kOk);
}

int cmd_ar_sequence(const std::string& alg_arg, const std::string& mod_arg, const std::string& out_file) {
  Output out;
  LoadedAlgebra la = load_algebra(alg_arg);
  Representation y = load_module(la.alg, mod_arg);
  SequenceData s = ar_sequence(y, opt.seed);
  VerificationReport r = verify_almost_dsplit(s);
  bool non_split = !splits(as_short_exact(s));
  auto mid = indecomposable_summands(s.terms[1], opt.seed);
  out.line("AR sequence 0 -> tau Y -> E -> Y -> 0: dims " + join(dims_of(s.terms), " -> "));
  out.line("middle summands: " + join(dims_of(mid), " + "));
  out.line("non-split: " + yes_no(non_split));
  out.line(std::string("verify: ") + (r.ok() ? "ok" : "FAIL"));
  report_lines(out, r);
  out.doc = json{{"sequence", io::sequence_to_json(s, la.id)}, {"non_split", non_split}, {"report", io::report_to_json(r)}};
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw InputError("cannot write '" + out_file + "'");
    f << io::sequence_to_json(s, la.id).dump(2) << "\n";
  }
  return out.finish(r.ok() && non_split ? kOk : kNegative);
}

int cmd_verify_sequence(const std::string& alg_arg, const std::string& seq_arg) {
  Output out;
  LoadedAlgebra la = load_algebra(alg_arg);
  SequenceData s = load_sequence(la.alg, seq_arg);
  bool dsplit = s.kind == SequenceKind::almost_dsplit;
  VerificationReport r = dsplit ? verify_almost_dsplit(s) : verify_lemma_conditions(s);
  out.line(std::string(dsplit ? "almost D-split" : "chain conditions") + ": " + (r.ok() ? "ok" : "FAIL"));
  report_lines(out, r);
  if (!r.ok()) out.line("failing: " + join(r.failing(), ", "));
  out.doc = json{{"kind", dsplit ? "almost-dsplit" : "chain"}, {"report", io::report_to_json(r)}, {"failing", r.failing()}};
  return out.finish(r.ok() ? kOk : kNegative);
}

int cmd_tilting(const std::string& alg_arg, const std::string& seq_arg, std::optional<std::size_t> n, bool bb) {
  Output out;
  LoadedAlgebra la = load_algebra(alg_arg);
  SequenceData s = load_sequence(la.alg, seq_arg);
  if (n && *n != s.n()) throw InputError("--n " + std::to_string(*n) + " does not match the sequence length " + std::to_string(s.n()));
  VerificationReport pre = verify_lemma_conditions(s);
  if (!pre.ok()) {
    out.line("sequence conditions: FAIL");
    report_lines(out, pre);
    out.doc = json{{"verdict", false}, {"sequence_report", io::report_to_json(pre)}};
    return out.finish(kNegative);
  }
  TiltingCertificate c = build_tilting(s, opt.seed);
  verify_tilting(c, opt.dim_cap());
  EndoIso iso = endo_of_tilting(c, opt.seed);

  std::vector<Representation> w_mods = s.target;
  w_mods.push_back(s.y());
  EndAlgebra w = end_algebra(distinct_indecomposables(w_mods, opt.seed), "End(W)");
  AlgebraInvariants inv_w = invariants(w.algebra, opt.dim_cap());
  AlgebraInvariants inv_l = invariants(c.lambda.algebra, opt.dim_cap());
  Comparison cmp = compare(inv_w, inv_l, c.n);

  out.line("verdict " + yes_no(c.verdict));
  out.line("n " + std::to_string(c.n) + ", dim Lambda " + std::to_string(c.lambda.algebra->dim()) + ", dim T " +
           std::to_string(c.module().dim()) + ", pd T " + c.checks->pd.to_string());
  out.line("dim End_Lambda(T) " + std::to_string(iso.end_t.dim()) + ", dim End(W) " + std::to_string(iso.end_w.dim()));
  out.line("dims " + std::to_string(iso.end_w.dim()) + "/" + std::to_string(c.lambda.algebra->dim()));
  out.line(std::string("tilting checks: ") + (c.checks->report.ok() ? "ok" : "FAIL"));
  report_lines(out, c.checks->report);
  out.line(std::string("ring isomorphism: ") + (iso.ok() ? "ok" : "FAIL"));
  report_lines(out, iso.report);
  invariant_lines(out, "End(W)", inv_w);
  invariant_lines(out, "Lambda", inv_l);
  out.line(std::string("invariants: ") + (cmp.ok() ? "ok" : "FAIL " + join(cmp.mismatches, ", ")));

  out.doc = io::certificate_to_json(c, &iso);
  out.doc["invariants"] = json{{"End_W", io::invariants_to_json(inv_w)},
                               {"Lambda", io::invariants_to_json(inv_l)},
                               {"comparison", io::comparison_to_json(cmp)}};
  bool ok = c.verdict && iso.ok() && cmp.ok();
  if (bb) {
    BBTiltingSpec spec = bb_recognize(c, opt.seed);
    out.line(std::string("BB recognition: ") + (spec.ok() ? "ok" : "FAIL") + (spec.apr ? ", APR" : ""));
    report_lines(out, spec.report);
    out.doc["bb"] = io::bb_to_json(spec);
  }
  if (c.checks->pd.capped()) return out.finish(kCap);
  return out.finish(ok ? kOk : kNegative);
}

int cmd_invariants(const std::string& alg_arg, const std::vector<std::string>& mods) {
  Output out;
  LoadedAlgebra la = load_algebra(alg_arg);
  AlgebraPtr target = la.alg;
  std::string title = la.id;
  if (!mods.empty()) {
    std::vector<Representation> ms;
    for (const auto& m : mods) ms.push_back(load_module(la.alg, m));
    title = "End(" + join(mods, "+") + ")";
    target = end_of(ms, title).algebra;
  }
  AlgebraInvariants inv = invariants(target, opt.dim_cap());
  inv.name = title;
  invariant_lines(out, title, inv);
  out.doc = io::invariants_to_json(inv);
  return out.finish(inv.gl_dim.capped() ? kCap : kOk);
}

int cmd_compare(const std::string& alg_arg, const std::string& list_a, const std::string& list_b, std::size_t n) {
  Output out;
  LoadedAlgebra la = load_algebra(alg_arg);
  AlgebraInvariants a = invariants(end_of(load_module_list(la.alg, list_a), "A").algebra, opt.dim_cap());
  AlgebraInvariants b = invariants(end_of(load_module_list(la.alg, list_b), "B").algebra, opt.dim_cap());
  a.name = "End(" + list_a + ")";
  b.name = "End(" + list_b + ")";
  Comparison c = compare(a, b, n);
  invariant_lines(out, a.name, a);
  invariant_lines(out, b.name, b);
  out.line(std::string("compare: ") + (c.ok() ? "ok" : "FAIL " + join(c.mismatches, ", ")));
  for (const auto& note : c.notes) out.line("note: " + note);
  out.doc = json{{"a", io::invariants_to_json(a)}, {"b", io::invariants_to_json(b)}, {"comparison", io::comparison_to_json(c)}};
  if ((a.gl_dim.capped() && b.gl_dim.finite()) || (b.gl_dim.capped() && a.gl_dim.finite())) return out.finish(kCap);
  return out.finish(c.ok() ? kOk : kNegative);
}

int cmd_syzygy_chain(const std::string& alg_arg, const std::string& mod_arg, std::size_t steps) {
  Output out;
  LoadedAlgebra la = load_algebra(alg_arg);
  Representation a = Representation::regular(la.alg);
  Representation x = load_module(la.alg, mod_arg);
  bool self_injective = is_injective(a);
  out.line("self-injective " + yes_no(self_injective));
  std::vector<AlgebraInvariants> chain;
  for (std::size_t k = 0; k <= steps; ++k) {
    Representation omega = syzygy_power(x, static_cast<int>(k));
    chain.push_back(invariants(end_of({a, omega}, "End(A+Omega^" + std::to_string(k) + ")").algebra, opt.dim_cap()));
    chain.back().name = "End(A+Omega^" + std::to_string(k) + " " + mod_arg + ")";
  }
  bool all_ok = true, capped = false;
  json steps_doc = json::array();
  invariant_lines(out, chain[0].name, chain[0]);
  for (std::size_t k = 1; k <= steps; ++k) {
    Comparison c = compare(chain[k - 1], chain[k], 1);
    invariant_lines(out, chain[k].name, chain[k]);
    out.line("  step " + std::to_string(k) + ": " + (c.ok() ? "ok" : "FAIL " + join(c.mismatches, ", ")));
    all_ok = all_ok && c.ok();
    const Dimension &p = chain[k - 1].gl_dim, &q = chain[k].gl_dim;
    capped = capped || (p.capped() && q.finite()) || (q.capped() && p.finite());
    steps_doc.push_back(json{{"k", k},
                             {"from", io::invariants_to_json(chain[k - 1])},
                             {"to", io::invariants_to_json(chain[k])},
                             {"comparison", io::comparison_to_json(c)}});
  }
  out.line(std::string("chain: ") + (all_ok ? "ok" : "FAIL"));
  out.doc = json{{"self_injective", self_injective}, {"steps", steps_doc}, {"ok", all_ok}};
  if (capped) return out.finish(kCap);
  return out.finish(all_ok ? kOk : kNegative);
}

int cmd_stable_end(const std::string& alg_arg, const std::string& mod_arg) {
  Output out;
  LoadedAlgebra la = load_algebra(alg_arg);
  Representation m = load_module(la.alg, mod_arg);
  StableEndAlgebra st = stable_end(m, opt.seed);
  out.line("dim End " + std::to_string(st.end.algebra->dim()) + ", dim P(M,M) " + std::to_string(st.ideal.cols()) +
           ", dim stable End " + std::to_string(st.dim()));
  out.doc = json{{"dim_End", st.end.algebra->dim()}, {"dim_projective_ideal", st.ideal.cols()}, {"dim_stable_End", st.dim()}};
  if (st.quotient) {
    auto c = cartan_matrix(*st.quotient);
    out.line("stable End: Cartan " + cartan_text(c) + ", det " + integer_determinant(c).get_str());
    out.doc["cartan"] = c;
    out.doc["cartan_det"] = integer_determinant(c).get_str();
  }
  return out.finish(kOk);
}

int cmd_n_bb(const std::string& alg_arg, const std::string& mod_arg, std::size_t n) {
  Output out;
  LoadedAlgebra la = load_algebra(alg_arg);
  Representation s = load_module(la.alg, mod_arg);
  BBTiltingSpec spec = n_bb_construct(s, n, opt.seed, opt.dim_cap());
  out.line(std::to_string(n) + "-BB construction: " + (spec.ok() ? "ok" : "FAIL"));
  if (spec.tilting) out.line("dim T " + std::to_string(spec.tilting->dim()));
  report_lines(out, spec.report);
  if (!spec.alternative.clauses.empty()) {
    out.line("alternative conditions (recorded, not compared):");
    report_lines(out, spec.alternative);
  }
  out.doc = io::bb_to_json(spec);
  return out.finish(spec.ok() ? kOk : kNegative);
}

struct Golden {
  long end_ny_dim = 7, end_nx_dim = 19, end_ny_gl_dim = 2, end_nx_gl_dim = 3, end_ny_cartan_det = 1, end_nx_cartan_det = 1;
};

json golden_to_json(const Golden& g) {
  return json{{"end_ny_dim", g.end_ny_dim},         {"end_nx_dim", g.end_nx_dim},
              {"end_ny_gl_dim", g.end_ny_gl_dim},   {"end_nx_gl_dim", g.end_nx_gl_dim},
              {"end_ny_cartan_det", g.end_ny_cartan_det}, {"end_nx_cartan_det", g.end_nx_cartan_det}};
}

Golden load_golden(const std::string& file) {
  Golden g;
  json j = io::load_json_file(file);
  try {
    g.end_ny_dim = j.at("end_ny_dim").get<long>();
    g.end_nx_dim = j.at("end_nx_dim").get<long>();
    g.end_ny_gl_dim = j.at("end_ny_gl_dim").get<long>();
    g.end_nx_gl_dim = j.at("end_nx_gl_dim").get<long>();
    g.end_ny_cartan_det = j.at("end_ny_cartan_det").get<long>();
    g.end_nx_cartan_det = j.at("end_nx_cartan_det").get<long>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed golden file: ") + e.what());
  }
  return g;
}

int cmd_example1(const std::string& golden_file) {
  Output out;
  Golden g = golden_file.empty() ? Golden{} : load_golden(golden_file);
  Field f = opt.field.empty() ? Field::prime(kDefaultPrime) : Field::parse(opt.field);
  Example1Data d = example1_data(f, opt.seed);
  VerificationReport seq = verify_almost_dsplit(d.sequence);
  TiltingCertificate c = build_tilting(d.sequence, opt.seed);
  verify_tilting(c, opt.dim_cap());
  EndoIso iso = endo_of_tilting(c, opt.seed);
  AlgebraInvariants ny = invariants(end_algebra({d.n, d.y}, "End(N+Y)").algebra, opt.dim_cap());
  AlgebraInvariants nx = invariants(c.lambda.algebra, opt.dim_cap());
  Comparison cmp = compare(ny, nx, c.n);

  auto gl = [](const Dimension& dm) { return dm.value ? static_cast<long>(*dm.value) : -1L; };
  struct Row {
    std::string name;
    long got, want;
  };
  std::vector<Row> rows = {{"dim End(N+Y)", static_cast<long>(ny.dim), g.end_ny_dim},
                           {"dim End(N+X)", static_cast<long>(nx.dim), g.end_nx_dim},
                           {"gl.dim End(N+Y)", gl(ny.gl_dim), g.end_ny_gl_dim},
                           {"gl.dim End(N+X)", gl(nx.gl_dim), g.end_nx_gl_dim},
                           {"det Cartan End(N+Y)", ny.cartan_det.get_si(), g.end_ny_cartan_det},
                           {"det Cartan End(N+X)", nx.cartan_det.get_si(), g.end_nx_cartan_det}};
  bool golden_ok = true;
  json diffs = json::array();
  out.line("field " + f.name() + ", dim A " + std::to_string(d.algebra->dim()) + ", dim X " + std::to_string(d.x.dim()));
  out.line(std::string("almost D-split: ") + (seq.ok() ? "ok" : "FAIL " + join(seq.failing(), ", ")));
  out.line("tilting verdict " + yes_no(c.verdict) + ", dim T " + std::to_string(c.module().dim()) + ", pd T " +
           c.checks->pd.to_string());
  out.line(std::string("ring isomorphism: ") + (iso.ok() ? "ok" : "FAIL " + join(iso.report.failing(), ", ")) +
           ", dim End_Lambda(T) " + std::to_string(iso.end_t.dim()));
  out.line(std::string("invariants: ") + (cmp.ok() ? "ok" : "FAIL " + join(cmp.mismatches, ", ")));
  for (const auto& r : rows) {
    bool ok = r.got == r.want;
    golden_ok = golden_ok && ok;
    std::string line = r.name + " " + std::to_string(r.got);
    if (!ok) {
      line += " != golden " + std::to_string(r.want);
      diffs.push_back(json{{"name", r.name}, {"got", r.got}, {"golden", r.want}});
    }
    out.line(line);
  }
  bool ok = golden_ok && seq.ok() && c.verdict && iso.ok() && cmp.ok();
  out.line(std::string("example1: ") + (ok ? "ok" : "FAIL"));
  out.doc = json{{"field", io::field_to_json(f)},
                 {"sequence_report", io::report_to_json(seq)},
                 {"certificate", io::certificate_to_json(c, &iso)},
                 {"End_NY", io::invariants_to_json(ny)},
                 {"End_NX", io::invariants_to_json(nx)},
                 {"comparison", io::comparison_to_json(cmp)},
                 {"golden_diff", diffs},
                 {"ok", ok}};
  return out.finish(ok ? kOk : kNegative);
}

void write_json(const fs::path& p, const json& j) {
  std::ofstream f(p);
  if (!f) throw InputError("cannot write '" + p.string() + "'");
  f << j.dump(2) << "\n";
}

int cmd_export_fixtures(const std::string& dir) {
  Output out;
  fs::create_directories(dir);
  fs::path d(dir);
  Field f = opt.field.empty() ? Field::prime(kDefaultPrime) : Field::parse(opt.field);
  std::vector<std::string> written;
  auto put = [&](const std::string& name, const json& j) {
    write_json(d / name, j);
    written.push_back(name);
  };
  for (const auto& name : fixture_names()) put(name + ".alg.json", io::presentation_to_json(fixture_presentation(name, f), f));

  Example1Data e = example1_data(f, opt.seed);
  put("example1.seq.json", io::sequence_to_json(e.sequence, "example1"));
  put("example1.Y.json", io::module_to_json(e.y, "example1"));
  put("example1.N.json", io::module_to_json(e.n, "example1"));
  put("example1.X.json", io::module_to_json(e.x, "example1"));
  put("example1.golden.json", golden_to_json(Golden{}));

  AlgebraPtr star3 = fixture_algebra("star3", f);
  SequenceData star_ar = builtin_ar_sequence(star3, "I1", opt.seed);
  put("star3.ar.seq.json", io::sequence_to_json(star_ar, "star3"));
  SequenceData star_broken = star_ar;
  star_broken.maps[1] = Morphism::zero(star_ar.terms[1], star_ar.terms[2]);
  put("star3.broken.seq.json", io::sequence_to_json(star_broken, "star3"));
  SequenceData star_split = split_sequence(builtin_module(star3, "P1"), builtin_module(star3, "I1"));
  star_split.maps[1] = Morphism::zero(star_split.terms[1], star_split.terms[2]);
  put("star3.split.seq.json", io::sequence_to_json(star_split, "star3"));

  AlgebraPtr a2 = fixture_algebra("a2", f);
  put("a2.ar.seq.json", io::sequence_to_json(builtin_ar_sequence(a2, "S1", opt.seed), "a2"));
  put("a2.broken.seq.json", io::sequence_to_json(a2_broken_sequence(f, opt.seed), "a2"));

  AlgebraPtr a3 = fixture_algebra("a3", f);
  put("a3.chain.seq.json", io::sequence_to_json(chain_sequence(a3, "S1", 2), "a3"));

  for (const auto& w : written) out.line("wrote " + (d / w).string());
  out.doc = json{{"written", written}};
  return out.finish(kOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tiltkit: exact computations with almost split sequences and tilting modules"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--field", opt.field, "gf:P or rational");
  app.add_option("--seed", opt.seed, "seed for randomized decompositions");
  app.add_option("--cap", opt.cap, "cap for ideal closure and dimension searches");
  app.add_flag("--json", opt.json, "print a JSON report");
  app.add_option("--threads", opt.threads, "OpenMP threads for the parallel kernels");

  std::string a1, a2, a3, out_file, golden;
  std::vector<std::string> many;
  std::size_t n = 1, steps = 1;
  std::optional<std::size_t> n_opt;
  bool bb = false;

  auto* check = app.add_subcommand("check-algebra", "dimension, radical and Cartan data of an algebra");
  check->add_option("algebra", a1)->required();
  auto* ar = app.add_subcommand("ar-sequence", "AR sequence ending at a module");
  ar->add_option("algebra", a1)->required();
  ar->add_option("module", a2)->required();
  ar->add_option("--out", out_file, "write the sequence as JSON");
  auto* verify = app.add_subcommand("verify-sequence", "check the almost split or chain conditions");
  verify->add_option("algebra", a1)->required();
  verify->add_option("sequence", a2)->required();
  auto* tilt = app.add_subcommand("tilting", "build and verify the tilting certificate of a sequence");
  tilt->add_option("algebra", a1)->required();
  tilt->add_option("sequence", a2)->required();
  tilt->add_option("--n", n_opt, "expected chain length");
  tilt->add_flag("--bb", bb, "also run BB recognition");
  auto* inv = app.add_subcommand("invariants", "invariants of an algebra or of End of a sum of modules");
  inv->add_option("algebra", a1)->required();
  inv->add_option("modules", many);
  auto* cmp = app.add_subcommand("compare", "compare End algebras of two comma-separated module lists");
  cmp->add_option("algebra", a1)->required();
  cmp->add_option("a", a2)->required();
  cmp->add_option("b", a3)->required();
  cmp->add_option("--n", n, "allowed gl.dim gap");
  auto* chain = app.add_subcommand("syzygy-chain", "compare End(A+Omega^(k-1) X) with End(A+Omega^k X)");
  chain->add_option("algebra", a1)->required();
  chain->add_option("module", a2)->required();
  chain->add_option("--steps", steps, "number of steps");
  auto* st = app.add_subcommand("stable-end", "stable endomorphism algebra");
  st->add_option("algebra", a1)->required();
  st->add_option("module", a2)->required();
  auto* nbb = app.add_subcommand("n-bb", "n-BB tilting module of a simple module");
  nbb->add_option("algebra", a1)->required();
  nbb->add_option("simple", a2)->required();
  nbb->add_option("--n", n, "n");
  auto* ex = app.add_subcommand("example1", "full pipeline on the local algebra k[x,y]/(x^2,y^2)");
  ex->add_option("--golden", golden, "golden values file");
  auto* exp = app.add_subcommand("export-fixtures", "write the bundled fixtures as JSON");
  exp->add_option("dir", a1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (opt.threads > 0) set_thread_count(opt.threads);
    if (*check) return cmd_check_algebra(a1);
    if (*ar) return cmd_ar_sequence(a1, a2, out_file);
    if (*verify) return cmd_verify_sequence(a1, a2);
    if (*tilt) return cmd_tilting(a1, a2, n_opt, bb);
    if (*inv) return cmd_invariants(a1, many);
    if (*cmp) return cmd_compare(a1, a2, a3, n);
    if (*chain) return cmd_syzygy_chain(a1, a2, steps);
    if (*st) return cmd_stable_end(a1, a2);
    if (*nbb) return cmd_n_bb(a1, a2, n);
    if (*ex) return cmd_example1(golden);
    if (*exp) return cmd_export_fixtures(a1);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const FieldError& e) {
    std::cerr << "field error: " << e.what() << "\n";
    return kInput;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kNegative;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
