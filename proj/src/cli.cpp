#include "ghfp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ghfp/abelian.hpp"
#include "ghfp/code.hpp"
#include "ghfp/error.hpp"
#include "ghfp/extension.hpp"
#include "ghfp/gh_matrix.hpp"
#include "ghfp/io.hpp"
#include "ghfp/monomial.hpp"
#include "ghfp/planar.hpp"
#include "ghfp/propelinear.hpp"

namespace ghfp {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool big = false;
  bool no_timing = false;
};

// What one invocation produced. Identical inputs and seed give identical
// outputs; only wall_time varies.
struct RunRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, hash
  std::uint64_t seed = 0;
  json outputs = json::object();
  double wall_time = 0;
  std::string headline;
  bool ok = true;
};

struct Input {
  std::string path;
  std::string format;
  std::optional<CocFile> coc;
  FieldMatrix matrix;
};

std::string resolve(const std::string& path) {
  if (fs::exists(path)) return path;
  if (const char* dir = std::getenv("GHFP_DATA_DIR")) {
    const fs::path alt = fs::path(dir) / path;
    if (fs::exists(alt)) return alt.string();
  }
  return path;
}

Input load(const std::string& raw, RunRecord& rec) {
  Input in;
  in.path = resolve(raw);
  in.format = sniff_format(in.path);
  rec.inputs.emplace_back(in.path, file_hash(in.path));
  if (in.format == "coc") {
    in.coc = read_coc_file(in.path);
    in.matrix = matrix_of(in.coc->cocycle);
  } else if (in.format == "ghm") {
    in.matrix = read_ghm_file(in.path);
  } else {
    throw Error(ErrorKind::InvalidArgument, in.path + " holds a group table, expected .coc or .ghm");
  }
  return in;
}

const Cocycle& need_cocycle(const Input& in) {
  if (!in.coc) throw Error(ErrorKind::InvalidArgument, in.path + ": this command needs a .coc file");
  return in.coc->cocycle;
}

bool is_labelled(const Input& in) { return in.coc && !in.coc->cocycle.group().labels().empty(); }

json structure_json(const GroupStructure& s) {
  if (s.abelian) return json(s.invariants);
  return json(s.to_string());
}

std::string gh_name(std::uint32_t q, std::uint32_t v) {
  return "GH(" + std::to_string(q) + "," + std::to_string(v / q) + ")";
}

std::string describe_witness(const GhWitness& w) {
  return std::string(w.transposed ? "columns " : "rows ") + std::to_string(w.i + 1) + "," + std::to_string(w.j + 1) +
         ": difference " + std::to_string(w.u) + " occurs " + std::to_string(w.count) + " times";
}

FieldPtr field_from(std::uint32_t p, std::uint32_t m, std::uint32_t q) {
  if (q != 0) {
    const auto f = detail::factorize(q);
    if (f.size() != 1) throw Error(ErrorKind::InvalidArgument, "q=" + std::to_string(q) + " is not a prime power");
    return Field::make_default(static_cast<std::uint32_t>(f[0].first), f[0].second);
  }
  return Field::make_default(p, m);
}

GHMatrix normalized_gh(const Input& in) {
  GHMatrix h = in.coc ? GHMatrix::from_orthogonal_cocycle(in.coc->cocycle) : GHMatrix::verified(in.matrix);
  return h.is_normalized() ? h : normalize(h);
}

// ---- build -----------------------------------------------------------------

struct BuildArgs {
  std::string construction;
  std::uint32_t p = 3, m = 1, q = 0, t = 2, k = 2, a = 4, b = 3;
  std::string left, right, order = "encoding", out;
};

void cmd_build(const BuildArgs& args, RunRecord& rec) {
  const OrderMode mode = args.order == "primitive" ? OrderMode::PrimitivePower : OrderMode::Encoding;
  std::optional<Cocycle> psi;
  const std::string& c = args.construction;
  if (c == "sylvester") {
    psi = sylvester_cocycle(field_from(args.p, args.m, args.q), mode);
  } else if (c == "sylvester-power") {
    if (args.t == 0) throw Error(ErrorKind::InvalidArgument, "t must be at least 1");
    const Cocycle s = sylvester_cocycle(field_from(args.p, args.m, args.q), mode);
    psi = s;
    for (std::uint32_t i = 1; i < args.t; ++i) psi = tensor(s, *psi);
  } else if (c == "gen-sylvester") {
    psi = gen_sylvester_cocycle(field_from(args.p, args.m, args.q), args.k);
  } else if (c == "planar") {
    psi = planar_coboundary({args.a, args.b});
  } else if (c == "kronecker") {
    if (args.left.empty() || args.right.empty()) throw Error(ErrorKind::InvalidArgument, "kronecker needs --left and --right");
    const Input l = load(args.left, rec), r = load(args.right, rec);
    psi = tensor(need_cocycle(l), need_cocycle(r));
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown construction " + c);
  }

  const auto orth = is_orthogonal(*psi);
  const FieldMatrix m = matrix_of(*psi);
  rec.outputs["construction"] = c;
  rec.outputs["q"] = psi->q();
  rec.outputs["v"] = psi->v();
  rec.outputs["orthogonal"] = orth.orthogonal;
  bool gh = orth.orthogonal;
  if (psi->v() <= 729) {
    const auto check = is_gh(m);
    gh = check.ok;
    rec.outputs["gh"] = gh;
    if (check.witness) rec.outputs["gh_witness"] = describe_witness(*check.witness);
  } else {
    rec.outputs["gh"] = "via_orthogonality";
  }
  if (!orth.orthogonal || !gh) {
    rec.ok = false;
    rec.headline = "refusing to write: the result is not " + gh_name(psi->q(), psi->v());
    return;
  }

  const fs::path prefix = args.out;
  if (prefix.has_parent_path()) fs::create_directories(prefix.parent_path());
  std::optional<std::string> group_ref;
  if (psi->group().kind() != Group::Kind::ElementaryAbelian) {
    const std::string cay = prefix.string() + ".cay";
    std::ofstream f(cay);
    write_cay(f, psi->group());
    group_ref = prefix.filename().string() + ".cay";
    rec.outputs["cay"] = cay;
  }
  {
    std::ofstream f(prefix.string() + ".coc");
    write_coc(f, *psi, group_ref);
  }
  {
    std::ofstream f(prefix.string() + ".ghm");
    write_ghm(f, m);
  }
  rec.outputs["coc"] = prefix.string() + ".coc";
  rec.outputs["ghm"] = prefix.string() + ".ghm";
  rec.headline = gh_name(psi->q(), psi->v()) + " written";
}

// ---- verify / code -----------------------------------------------------------

void cmd_verify(const std::string& file, const Globals&, RunRecord& rec) {
  const Input in = load(file, rec);
  const auto q = in.matrix.field()->q();
  const auto v = in.matrix.rows();
  const auto check = is_gh(in.matrix);
  rec.outputs["q"] = q;
  rec.outputs["v"] = v;
  rec.outputs["lambda"] = v / q;
  rec.outputs["gh"] = check.ok;
  if (in.coc) rec.outputs["orthogonal"] = is_orthogonal(in.coc->cocycle).orthogonal;
  if (check.ok) {
    rec.headline = gh_name(q, v) + " OK";
  } else {
    rec.ok = false;
    rec.headline = "not " + gh_name(q, v) + ": " + describe_witness(*check.witness);
    rec.outputs["witness"] = describe_witness(*check.witness);
  }
}

struct CodeFlags {
  bool rank = false, kernel = false, p_kernel = false, min_distance = false;
  bool any() const { return rank || kernel || p_kernel || min_distance; }
};

void code_outputs(const GHCode& code, CodeFlags f, const Globals& g, RunRecord& rec) {
  if (!f.any()) f = {true, true, true, true};
  rec.outputs["q"] = code.q();
  rec.outputs["v"] = code.v();
  if (f.rank) rec.outputs["rank"] = code.rank();
  if (f.kernel || f.p_kernel) {
    const auto ks = code.kernel(g.seed, g.threads);
    if (f.kernel) rec.outputs["kernel"] = ks.info.dimension;
    if (f.p_kernel) {
      const auto bound = p_kernel_bound(code.field()->p(), code.q(), code.v());
      rec.outputs["p_kernel"] = ks.info.p_dimension;
      rec.outputs["p_kernel_upper"] = bound.upper();
      const bool within = bound.e * ks.info.dimension <= ks.info.p_dimension && ks.info.p_dimension <= bound.upper();
      rec.outputs["p_kernel_bound"] = within;
      rec.ok = rec.ok && within;
    }
    std::uint64_t qk = 1;
    for (std::uint32_t i = 0; i < ks.info.dimension && qk <= code.size(); ++i) qk *= code.q();
    rec.outputs["linear"] = qk == code.size();
    rec.outputs["kernel_seed"] = ks.seed;
  }
  if (f.min_distance) {
    const auto d = code.min_distance();
    rec.outputs["min_distance"] = d.value;
    rec.outputs["min_distance_mode"] = d.mode == DistanceMode::Exact ? "exact" : "theoretical";
  }
}

void cmd_code(const std::string& file, CodeFlags flags, const Globals& g, RunRecord& rec) {
  const Input in = load(file, rec);
  code_outputs(GHCode::from_matrix(normalized_gh(in)), flags, g, rec);
}

// ---- propelinear -------------------------------------------------------------

struct PropFlags {
  bool pi_table = false, group_structure = false, verify = false;
};

void pi_table(const PropelinearCode& p, bool labelled, RunRecord& rec) {
  for (std::uint32_t g = 0; g < p.v(); ++g) {
    const std::string key = labelled ? p.group().label(g) : std::to_string(g);
    rec.outputs["pi[" + key + "]"] = p.pi_listing(g).cycle_form();
  }
}

void verification(const PropelinearCode& p, bool with_checks, bool with_groups, const Globals& g, RunRecord& rec) {
  VerifyOptions opt;
  opt.seed = g.seed;
  opt.structures = with_groups;
  const auto report = verify_full_propelinear(p, opt);
  if (with_groups) {
    rec.outputs["group"] = structure_json(report.code_group);
    rec.outputs["pi_group"] = structure_json(report.pi_group);
    rec.outputs["quotient_group"] = structure_json(report.quotient_group);
  }
  if (!with_checks) return;
  bool sampled = false;
  for (const auto& it : report.items) {
    rec.outputs["check." + it.name] = it.pass;
    if (!it.pass) rec.outputs["check." + it.name + ".witness"] = it.witness;
    sampled = sampled || it.sampled;
  }
  const bool reg = regular_subgroup_check(p, opt);
  rec.outputs["check.regular_subgroup"] = reg;
  rec.outputs["checks_sampled"] = sampled;
  rec.outputs["propelinear"] = report.all_pass() && reg;
  rec.ok = rec.ok && report.all_pass() && reg;
}

void cmd_propelinear(const std::string& file, PropFlags f, const Globals& g, RunRecord& rec) {
  const Input in = load(file, rec);
  const auto p = PropelinearCode::from_cocycle(need_cocycle(in));
  if (!f.pi_table && !f.group_structure && !f.verify) f = {true, true, true};
  rec.outputs["q"] = p.q();
  rec.outputs["v"] = p.v();
  if (f.group_structure || f.verify) verification(p, f.verify, f.group_structure, g, rec);
  if (f.pi_table) pi_table(p, is_labelled(in), rec);
}

// ---- rds / autcheck ----------------------------------------------------------

void equivalence(const Cocycle& psi, bool gh_check, RunRecord& rec) {
  const bool orth = is_orthogonal(psi).orthogonal;
  const bool rds = transversal_rds(psi).ok;
  rec.outputs["orthogonal"] = orth;
  bool agree = orth == rds;
  if (gh_check) {
    const bool gh = is_gh(matrix_of(psi)).ok;
    rec.outputs["gh"] = gh;
    agree = agree && gh == orth;
  }
  rec.outputs["transversal_rds"] = rds;
  if (orth) {
    const bool fh = fh_rds(PropelinearCode::from_cocycle(psi)).ok;
    rec.outputs["fh_rds"] = fh;
    agree = agree && fh;
  }
  rec.outputs["equivalence"] = agree ? "agree" : "disagree";
  rec.ok = rec.ok && agree;
}

void profile(const PropelinearCode& p, RunRecord& rec) {
  const auto prof = fh_intersection_profile(p);
  for (const auto& [size, count] : prof.histogram) rec.outputs["profile[" + std::to_string(size) + "]"] = count;
  rec.outputs["profile_cases"] = prof.cases_hold;
  if (!prof.cases_hold) rec.outputs["profile_witness"] = prof.witness;
  rec.ok = rec.ok && prof.cases_hold;
}

void cmd_rds(const std::string& file, bool with_profile, bool force, const Globals&, RunRecord& rec) {
  const Input in = load(file, rec);
  const Cocycle& psi = need_cocycle(in);
  if (psi.v() >= 729 && !force) {
    throw Error(ErrorKind::SizeGateExceeded, "v=" + std::to_string(psi.v()) + " needs --force");
  }
  rec.outputs["q"] = psi.q();
  rec.outputs["v"] = psi.v();
  equivalence(psi, true, rec);
  if (with_profile) {
    if (!is_orthogonal(psi).orthogonal) throw Error(ErrorKind::NotOrthogonal, "the profile needs an orthogonal cocycle");
    profile(PropelinearCode::from_cocycle(psi), rec);
  }
}

void cmd_autcheck(const std::string& file, bool full, bool expanded, const Globals& g, RunRecord& rec) {
  const Input in = load(file, rec);
  const auto p = PropelinearCode::from_cocycle(need_cocycle(in));
  AutOptions opt;
  opt.full = full;
  opt.seed = g.seed;
  const auto r = automorphisms_from_star(p, opt);
  rec.outputs["q"] = p.q();
  rec.outputs["v"] = p.v();
  rec.outputs["pairs_checked"] = r.checked;
  rec.outputs["pairs_verified"] = r.verified;
  rec.outputs["sampled"] = r.sampled;
  rec.outputs["homomorphism"] = r.homomorphism;
  rec.outputs["transitive_on_rows"] = r.transitive_on_rows;
  rec.outputs["scalar_pairs"] = r.scalar_pairs;
  if (!r.witness.empty()) rec.outputs["witness"] = r.witness;
  rec.ok = r.all_pass();
  if (expanded) {
    const auto e = regular_row_action_check(p, g.seed);
    rec.outputs["expanded.automorphisms"] = e.automorphisms;
    rec.outputs["expanded.transitive"] = e.transitive;
    rec.outputs["expanded.free"] = e.free;
    rec.outputs["expanded.closed"] = e.closed;
    rec.outputs["expanded.sampled"] = e.sampled;
    rec.outputs["expanded.regular"] = e.regular();
    if (!e.witness.empty()) rec.outputs["expanded.witness"] = e.witness;
    rec.ok = rec.ok && e.regular();
  }
}

// ---- table1 / report ---------------------------------------------------------

void cmd_table1(std::uint32_t a_min, std::uint32_t a_max, const Globals& g, RunRecord& rec) {
  Table1Options opt;
  opt.a_min = a_min;
  opt.a_max = a_max;
  opt.budget_a = g.big ? 7 : 6;
  opt.seed = g.seed;
  opt.threads = g.threads;
  json cells = json::array();
  for (const auto& c : table1(opt)) {
    json row;
    row["a"] = c.a;
    row["b"] = c.b;
    row["v"] = c.v;
    row["status"] = to_string(c.status);
    if (c.status == CellStatus::Computed) {
      row["rank"] = c.rank;
      row["kernel"] = c.kernel;
    }
    row["conjecture_r"] = c.conjecture;
    if (c.status == CellStatus::Computed) {
      row["match"] = c.match;
      if (!g.no_timing) row["seconds"] = c.seconds;
      rec.ok = rec.ok && c.match;
    }
    cells.push_back(std::move(row));
  }
  rec.outputs["budget_a"] = opt.budget_a;
  rec.outputs["cells"] = std::move(cells);
}

void cmd_report(const std::string& file, const Globals& g, RunRecord& rec) {
  const Input in = load(file, rec);
  const auto q = in.matrix.field()->q();
  const auto v = in.matrix.rows();
  const auto check = is_gh(in.matrix);
  rec.outputs["q"] = q;
  rec.outputs["v"] = v;
  rec.outputs["gh"] = check.ok;
  rec.headline = check.ok ? gh_name(q, v) + " OK" : "not " + gh_name(q, v) + ": " + describe_witness(*check.witness);
  rec.ok = check.ok;
  if (!in.coc) {
    if (check.ok) code_outputs(GHCode::from_matrix(normalized_gh(in)), {}, g, rec);
    return;
  }
  const Cocycle& psi = in.coc->cocycle;
  equivalence(psi, false, rec);
  if (!is_orthogonal(psi).orthogonal) {
    rec.ok = false;
    return;
  }
  const auto p = PropelinearCode::from_cocycle(psi);
  verification(p, true, true, g, rec);
  code_outputs(p.code(), {}, g, rec);
  profile(p, rec);
}

// ---- output ------------------------------------------------------------------

std::string text_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + text_value(v[i]);
    return s + "]";
  }
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v.get<double>());
    return buf;
  }
  return v.dump();
}

void print_cells(std::ostream& out, const json& cells, bool timing) {
  out << "a b v rank kernel conjecture_r match" << (timing ? " seconds" : "") << " status\n";
  for (const auto& c : cells) {
    const bool computed = c.contains("rank");
    out << c["a"] << ' ' << c["b"] << ' ' << c["v"] << ' ' << (computed ? c["rank"].dump() : "-") << ' '
        << (computed ? c["kernel"].dump() : "-") << ' ' << c["conjecture_r"] << ' '
        << (computed ? c["match"].dump() : "-");
    if (timing) out << ' ' << (c.contains("seconds") ? text_value(c["seconds"]) : "-");
    out << ' ' << c["status"].get<std::string>() << '\n';
  }
}

void emit(std::ostream& out, const RunRecord& rec, const Globals& g) {
  if (g.json) {
    json j;
    j["command"] = rec.command;
    json inputs = json::array();
    for (const auto& [path, hash] : rec.inputs) inputs.push_back({{"path", path}, {"hash", hash}});
    j["inputs"] = std::move(inputs);
    j["seed"] = rec.seed;
    j["ok"] = rec.ok;
    j["outputs"] = rec.outputs;
    if (!g.no_timing) j["wall_time"] = rec.wall_time;
    out << j.dump(2) << '\n';
    return;
  }
  if (!rec.headline.empty()) out << rec.headline << '\n';
  for (const auto& [path, hash] : rec.inputs) out << "input_hash=" << hash << '\n';
  for (const auto& [key, value] : rec.outputs.items()) {
    if (key == "cells") {
      print_cells(out, value, !g.no_timing);
    } else {
      out << key << '=' << text_value(value) << '\n';
    }
  }
  out << "seed=" << rec.seed << '\n';
  if (!g.no_timing) out << "wall_time=" << text_value(json(rec.wall_time)) << '\n';
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cocyclic generalized Hadamard matrices and their full propelinear codes"};
  app.name("ghfp");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit a JSON run record");
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware)");
  app.add_flag("--big", g.big, "Raise size budgets");
  app.add_flag("--no-timing", g.no_timing, "Omit wall-clock fields");

  BuildArgs build;
  auto* sb = app.add_subcommand("build", "Construct a cocycle and write .coc/.ghm files");
  sb->add_option("--construction", build.construction)
      ->required()
      ->check(CLI::IsMember({"sylvester", "sylvester-power", "gen-sylvester", "planar", "kronecker"}));
  sb->add_option("--p", build.p, "Characteristic");
  sb->add_option("--m", build.m, "Extension degree");
  sb->add_option("--q", build.q, "Field order (overrides --p/--m)");
  sb->add_option("--t", build.t, "Kronecker power");
  sb->add_option("--k", build.k, "Dimension of GF(q)^k");
  sb->add_option("--a", build.a, "Planar: GF(3^a)");
  sb->add_option("--b", build.b, "Planar: exponent (3^b+1)/2");
  sb->add_option("--left", build.left, "Left .coc for kronecker");
  sb->add_option("--right", build.right, "Right .coc for kronecker");
  sb->add_option("--order", build.order, "Element order of (F_q,+)")->check(CLI::IsMember({"encoding", "primitive"}));
  sb->add_option("-o,--out", build.out, "Output prefix")->required();

  std::string file;
  auto* sv = app.add_subcommand("verify", "Check the GH property");
  sv->add_option("file", file)->required();

  CodeFlags cf;
  auto* sc = app.add_subcommand("code", "Rank, kernel and distance of C_H");
  sc->add_option("file", file)->required();
  sc->add_flag("--rank", cf.rank);
  sc->add_flag("--kernel", cf.kernel);
  sc->add_flag("--p-kernel", cf.p_kernel);
  sc->add_flag("--min-distance", cf.min_distance);

  PropFlags pf;
  auto* sp = app.add_subcommand("propelinear", "Full propelinear structure of C_H");
  sp->add_option("file", file)->required();
  sp->add_flag("--pi-table", pf.pi_table);
  sp->add_flag("--group-structure", pf.group_structure);
  sp->add_flag("--verify", pf.verify);

  bool with_profile = false, force = false;
  auto* sr = app.add_subcommand("rds", "Orthogonality, GH and relative difference set agreement");
  sr->add_option("file", file)->required();
  sr->add_flag("--profile", with_profile);
  sr->add_flag("--force", force);

  bool full = false, expanded = false;
  auto* sa = app.add_subcommand("autcheck", "Monomial automorphisms from the group law");
  sa->add_option("file", file)->required();
  sa->add_flag("--full", full);
  sa->add_flag("--expanded", expanded);

  std::uint32_t a_min = 4, a_max = 7;
  auto* st = app.add_subcommand("table1", "Rank and kernel of planar codes over GF(3^a)");
  st->add_option("--a-min", a_min);
  st->add_option("--a-max", a_max);

  auto* so = app.add_subcommand("report", "Consolidated report for one file");
  so->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (g.threads == 0) g.threads = std::max(1u, std::thread::hardware_concurrency());

  RunRecord rec;
  rec.seed = g.seed;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (sb->parsed()) {
      rec.command = "build";
      cmd_build(build, rec);
    } else if (sv->parsed()) {
      rec.command = "verify";
      cmd_verify(file, g, rec);
    } else if (sc->parsed()) {
      rec.command = "code";
      cmd_code(file, cf, g, rec);
    } else if (sp->parsed()) {
      rec.command = "propelinear";
      cmd_propelinear(file, pf, g, rec);
    } else if (sr->parsed()) {
      rec.command = "rds";
      cmd_rds(file, with_profile, force, g, rec);
    } else if (sa->parsed()) {
      rec.command = "autcheck";
      cmd_autcheck(file, full, expanded, g, rec);
    } else if (st->parsed()) {
      rec.command = "table1";
      cmd_table1(a_min, a_max, g, rec);
    } else if (so->parsed()) {
      rec.command = "report";
      cmd_report(file, g, rec);
    }
  } catch (const Error& e) {
    err << "ghfp: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    err << "ghfp: " << e.what() << '\n';
    return 1;
  }
  rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(out, rec, g);
  return rec.ok ? 0 : 1;
}

}  // namespace ghfp
