// Census driver: sweeps (p, tau) over the sporadic catalogue, runs the
// non-discreteness tests, the arithmeticity criterion, the G-procedure on
// the candidate lattices, and the conjectured presentation/cusp checks, and
// emits a deterministic JSON report.  Table mode (--tables) reproduces the
// published numeric tables for a single proposition id.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <chc/arith.hpp>
#include <chc/dirichlet.hpp>
#include <chc/discretetest.hpp>
#include <chc/presentations.hpp>
#include <chc/report.hpp>

namespace {

using namespace chc;

constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

struct Config {
  long pmin = 2, pmax = 24;
  std::vector<std::string> taus;  // empty: all 18
  int grid = 200;
  long precision = 256;
  std::size_t max_words = 1500;
  int max_steps = 12;
  std::optional<std::array<double, 3>> center_override;
  std::string tables;
  bool faces_svg = false;
  std::string json_path;
  std::string out_dir = ".";
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sanitize(const std::string& label) {
  std::string out;
  for (char c : label) out += (c == '\'') ? 'i' : c;
  return out;
}

std::string angle_str(const PiRational& a) {
  std::ostringstream os;
  if (a.num != 1) os << a.num << "*";
  os << "pi/" << a.den;
  return os.str();
}

// ---------------------------------------------------------------------------
// Table mode: rows of the published proposition tables.

struct TableRow {
  const char* tau;
  long p;
  int fam;  // 1, 2, or 0 for the vertical-translation (Shimizu) rows
};

const std::map<std::string, std::vector<TableRow>>& prop_tables() {
  static const std::map<std::string, std::vector<TableRow>> t = {
      {"sig1",
       {{"s1", 7, 1}, {"s1", 8, 1}, {"s1", 12, 1}, {"s1", 15, 1},
        {"s1", 18, 1}, {"s1", 21, 1}}},
      {"sig1'", {{"s1", 9, 2}}},
      {"sig1c'", {{"s1c", 3, 2}, {"s1c", 6, 2}, {"s1c", 7, 2}}},
      {"sig2",
       {{"s2", 6, 1}, {"s2", 7, 1}, {"s2", 8, 1}, {"s2", 15, 1},
        {"s2", 20, 1}, {"s2", 25, 1}, {"s2", 30, 1}, {"s2", 35, 1}}},
      {"sig2'", {{"s2", 10, 2}, {"s2c", 10, 2}}},
      {"sig2c", {{"s2c", 6, 1}, {"s2c", 7, 1}, {"s2c", 15, 1}}},
      {"sig4",
       {{"s4", 4, 0}, {"s4", 5, 1}, {"s4", 6, 1}, {"s5c", 4, 0},
        {"s6", 5, 1}, {"s6c", 5, 1}}},
      {"sig4c",
       {{"s4c", 7, 1}, {"s4c", 9, 1}, {"s4c", 10, 1}, {"s4c", 14, 1},
        {"s4c", 16, 1}, {"s4c", 20, 1}, {"s4c", 24, 1}, {"s4c", 28, 1}}},
      {"sig5",
       {{"s5", 7, 1}, {"s5", 9, 1}, {"s5", 10, 1}, {"s5", 14, 1},
        {"s5", 16, 1}, {"s5", 20, 1}, {"s5", 24, 1}, {"s5", 28, 1}}},
      {"sig7",
       {{"s7", 5, 1}, {"s7", 6, 1}, {"s7", 8, 1}, {"s7", 21, 1},
        {"s7", 28, 1}, {"s7", 35, 1}, {"s7", 42, 1}, {"s7", 49, 1}}},
  };
  return t;
}

int run_tables(const Config& cfg) {
  std::string id = cfg.tables;
  if (id.rfind("prop:", 0) == 0) id = id.substr(5);
  auto it = prop_tables().find(id);
  if (it == prop_tables().end())
    throw ConfigError("unknown table id: " + cfg.tables +
                      " (expected prop:sig1, prop:sig1', prop:sig1c', "
                      "prop:sig2, prop:sig2', prop:sig2c, prop:sig4, "
                      "prop:sig4c, prop:sig5, prop:sig7)");
  std::printf("%-4s %-5s %-10s %-22s %s\n", "p", "tau", "alpha_p",
              "cosh(delta) sin(alpha)", "test");
  for (const TableRow& row : it->second) {
    TriangleGroup G(row.p, sporadic(row.tau).value, row.tau);
    if (row.fam == 0) {
      TestVerdict v = shimizu_test(G);
      std::printf("%-4ld %-5s %-10s %-22.4f %s\n", row.p, row.tau, "-",
                  v.witness,
                  v.nondiscrete ? "shimizu: nondiscrete" : "shimizu: silent");
      continue;
    }
    TestTarget t =
        row.fam == 1 ? build_target_r1r2(G) : build_target_r1232(G);
    TestVerdict v = jorgensen_test(t);
    std::string test = "inconclusive";
    if (v.nondiscrete) {
      test = "jorgensen: v < 1/2";
    } else {
      v = knapp_test(t);
      if (v.nondiscrete) test = "knapp: angle gap";
    }
    std::printf("%-4ld %-5s %-10s %-22.4f %s\n", row.p, row.tau,
                angle_str(t.alpha.alpha).c_str(), t.value, test.c_str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Census mode.

std::string verdict_string(const CensusRow& row) {
  if (!row.hyperbolic) return "skipped(not hyperbolic)";
  if (row.verdict.nondiscrete) return "nondiscrete(" + row.family + ")";
  return "inconclusive";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ResourceError("cannot open " + path + " for writing");
  f << content;
  if (!f) throw ResourceError("short write to " + path);
}

void export_faces(const ProcedureOutcome& out, const SideReport& rep,
                  const Config& cfg, long p, const std::string& tau) {
  for (const SideClass& cls : rep.merged) {
    // one representative 2-face per merged side class
    const FaceSample* pick = nullptr;
    std::set<int> members(cls.members.begin(), cls.members.end());
    for (const FaceSample& f : out.faces)
      if (members.count(f.a) || members.count(f.b)) { pick = &f; break; }
    if (!pick) continue;
    std::string stem = cfg.out_dir + "/face_p" + std::to_string(p) + "_" +
                       tau + "_" + sanitize(cls.label);
    write_file(stem + ".svg", face_svg(*pick, *out.domain));
    std::ostringstream csv;
    csv << "row,col\n";
    for (auto [r, c] : pick->hits) csv << r << "," << c << "\n";
    write_file(stem + ".csv", csv.str());
  }
}

CensusRecord build_record(const SporadicValue& sv, long p, const Config& cfg) {
  CensusRecord rec;
  rec.p = p;
  rec.tau_id = sv.id;
  rec.signature = herm_form_signature(p, sv.value);
  if (rec.signature != std::make_tuple(2, 0, 1)) {
    auto [pos, zero, neg] = rec.signature;
    rec.verdict = "skipped(signature " + std::to_string(pos) + "," +
                  std::to_string(zero) + "," + std::to_string(neg) + ")";
    rec.behaviour = "skipped(not hyperbolic)";
    rec.arithmeticity = "skipped(not hyperbolic)";
    rec.relations = "skipped(not hyperbolic)";
    rec.cusps = "skipped(not hyperbolic)";
    rec.pairing_status = "skipped(not hyperbolic)";
    return rec;
  }
  TriangleGroup G(p, sv.value, sv.id);

  // non-discreteness verdict
  auto rows = census_nondiscrete(p, p, {sv.id});
  const CensusRow& row = rows.at(0);
  rec.verdict = verdict_string(row);
  if (row.verdict.nondiscrete)
    rec.verdict_detail = decimal15(row.verdict.witness);
  else
    rec.verdict_detail = row.detail;

  // arithmeticity
  ArithFlag af = arithmetic_criterion(G);
  rec.arithmeticity =
      af.satisfies ? "satisfies" : "fails(t=" + std::to_string(af.witness_t) +
                                   ")";

  // conjectured presentation / cusps
  int rel_total = 0, rel_hold = 0;
  for (const Presentation& pres : conjectured_presentations()) {
    if (pres.tau_id != sv.id || pres.p != p) continue;
    for (const CuspRelation& r : pres.relations) {
      ++rel_total;
      rel_hold += G.verify_relation(r.lhs, r.rhs).holds;
    }
  }
  rec.relations = rel_total == 0
                      ? "skipped(no conjectured presentation)"
                      : std::to_string(rel_hold) + "/" +
                            std::to_string(rel_total) + " hold exactly";
  int cusp_total = 0, cusp_ok = 0;
  for (const CuspEntry& ce : conjectured_cusps()) {
    if (ce.tau_id != sv.id || ce.p != p) continue;
    ++cusp_total;
    auto rep = cusp_report(G, {ce.candidate});
    bool ok = rep[0].common_null_fixed;
    for (bool b : rep[0].relations_hold) ok = ok && b;
    for (bool b : rep[0].parabolic_ok) ok = ok && b;
    cusp_ok += ok;
  }
  rec.cusps = cusp_total == 0 ? "skipped(no conjectured cusps)"
                              : std::to_string(cusp_ok) + "/" +
                                    std::to_string(cusp_total) + " verified";

  // G-procedure on the candidate lattices only
  if (row.verdict.nondiscrete) {
    rec.behaviour = "skipped(nondiscrete)";
    rec.pairing_status = "skipped(nondiscrete)";
    return rec;
  }
  if (sv.id == "s4c" && p == 8 && !cfg.center_override)
    rec.note = "center override recommended for this group";
  Limits lim;
  lim.grid = cfg.grid;
  lim.max_steps = cfg.max_steps;
  lim.max_words = cfg.max_words;
  ProcedureOutcome out = g_procedure(G, lim, cfg.center_override);
  rec.behaviour = std::string(1, out.behaviour);
  if (out.behaviour != 'A') {
    rec.pairing_status = "skipped(behaviour " + rec.behaviour + ")";
    return rec;
  }
  SideReport rep = side_classes(out);
  for (const SideClass& cls : rep.merged) rec.face_words.push_back(cls.label);
  auto pairing = side_pairing_check(out);
  int matched = 0;
  for (const PairingEntry& e : pairing) matched += e.matched;
  rec.pairing_status = std::to_string(matched) + "/" +
                       std::to_string(pairing.size()) + " matched";
  rec.cycles = cycle_angles(out);
  if (cfg.faces_svg) export_faces(out, rep, cfg, p, sv.id);
  return rec;
}

int run_census(const Config& cfg) {
  std::vector<const SporadicValue*> selected;
  for (const SporadicValue& sv : sporadic_catalogue()) {
    if (cfg.taus.empty()) {
      selected.push_back(&sv);
    } else {
      for (const std::string& id : cfg.taus)
        if (sv.id == id) selected.push_back(&sv);
    }
  }
  if (!cfg.taus.empty() && selected.size() != cfg.taus.size())
    throw ConfigError("unknown tau id among: " + [&] {
      std::string s;
      for (const auto& t : cfg.taus) s += t + " ";
      return s;
    }());

  std::vector<CensusRecord> records;
  for (const SporadicValue* sv : selected)
    for (long p = cfg.pmin; p <= cfg.pmax; ++p) {
      auto t0 = std::chrono::steady_clock::now();
      records.push_back(build_record(*sv, p, cfg));
      auto dt = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      std::fprintf(stderr, "[%s p=%ld] %.2fs  %s  behaviour=%s\n",
                   sv->id.c_str(), p, dt, records.back().verdict.c_str(),
                   records.back().behaviour.c_str());
    }

  nlohmann::json config;
  config["p_range"] = {cfg.pmin, cfg.pmax};
  config["tau"] = cfg.taus.empty() ? std::vector<std::string>{"all"}
                                   : cfg.taus;
  config["grid"] = cfg.grid;
  config["precision"] = cfg.precision;
  config["max_words"] = cfg.max_words;
  config["max_steps"] = cfg.max_steps;
  if (cfg.center_override)
    config["center_override"] = {(*cfg.center_override)[0],
                                 (*cfg.center_override)[1],
                                 (*cfg.center_override)[2]};
  config["faces_svg"] = cfg.faces_svg;

  std::string text = report_to_string(census_report(config, records));
  if (cfg.json_path.empty())
    std::fputs(text.c_str(), stdout);
  else
    write_file(cfg.json_path, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census of the sporadic complex hyperbolic triangle groups"};
  Config cfg;
  std::string p_range, center_override;
  app.add_option("--p-range", p_range, "p range as A..B (default 2..24)");
  app.add_option("--tau", cfg.taus,
                 "sporadic value ids (s1..s9, s1c..s9c); default all");
  app.add_option("--grid", cfg.grid, "Giraud torus sampling grid N");
  app.add_option("--precision", cfg.precision,
                 "working precision in bits for decimal embeddings");
  app.add_option("--max-words", cfg.max_words, "word cap for the G-procedure");
  app.add_option("--max-steps", cfg.max_steps, "step cap for the G-procedure");
  app.add_option("--center-override", center_override,
                 "perturb the domain center by x,y,z");
  app.add_option("--tables", cfg.tables,
                 "print a published numeric table (e.g. prop:sig4c) and exit");
  app.add_flag("--faces-svg", cfg.faces_svg,
               "export one SVG + CSV per face class of Behaviour A records");
  app.add_option("--json", cfg.json_path, "write the JSON report here");
  app.add_option("--out-dir", cfg.out_dir, "directory for SVG/CSV exports");

  try {
    app.parse(argc, argv);
    if (!p_range.empty()) {
      auto dots = p_range.find("..");
      if (dots == std::string::npos)
        throw ConfigError("--p-range must be A..B");
      cfg.pmin = std::stol(p_range.substr(0, dots));
      cfg.pmax = std::stol(p_range.substr(dots + 2));
      if (cfg.pmin < 2 || cfg.pmax < cfg.pmin)
        throw ConfigError("--p-range must satisfy 2 <= A <= B");
    }
    if (!center_override.empty()) {
      std::array<double, 3> v{};
      std::istringstream is(center_override);
      char c1, c2;
      if (!(is >> v[0] >> c1 >> v[1] >> c2 >> v[2]) || c1 != ',' || c2 != ',')
        throw ConfigError("--center-override must be x,y,z");
      cfg.center_override = v;
    }
    if (cfg.grid < 8) throw ConfigError("--grid must be at least 8");
    if (!cfg.tables.empty()) return run_tables(cfg);
    return run_census(cfg);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const ResourceError& e) {
    std::fprintf(stderr, "resource error: %s\n", e.what());
    return kExitResource;
  } catch (const std::bad_alloc&) {
    std::fprintf(stderr, "resource error: out of memory\n");
    return kExitResource;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitResource;
  }
}
