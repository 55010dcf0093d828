#include "ribbonforge/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "ribbonforge/error.hpp"
#include "ribbonforge/report.hpp"

namespace ribbonforge {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

IntRange parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("bad range '" + text + "' (expected A..B or A)");
    return v;
  };
  IntRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
  return r;
}

namespace {

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("expected an integer, got '" + s + "'");
  return v;
}

Family build_family(const std::string& family, const std::vector<int>& params) {
  if (family == "taft") {
    if (params.size() != 1) throw UsageError("taft takes one parameter n");
    return build_taft(params[0]);
  }
  if (family == "radford") {
    if (params.size() != 2) throw UsageError("radford takes two parameters m n");
    return build_radford(params[0], params[1]);
  }
  throw UsageError("unknown family '" + family + "' (expected radford or taft)");
}

std::string file_stem(const Family& f) {
  return f.is_taft() ? "taft-" + std::to_string(f.n) : "radford-" + std::to_string(f.m) + "-" + std::to_string(f.n);
}

// Write to a temporary sibling, then rename over the target.
void write_atomic(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id();
  const fs::path tmp = path.string() + suffix.str();
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw UsageError("cannot write " + tmp.string());
    os << text;
    if (!os.flush()) throw UsageError("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

struct Common {
  std::string format = "text";
  std::string out_dir;
  std::size_t bound = kDefaultFullBound;
  std::size_t budget = 0;  // 0: take double_budget()
};

void add_common(CLI::App* cmd, Common& c, bool with_format) {
  if (with_format) cmd->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--bound", c.bound, "largest dimension checked at full depth")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", c.budget, "largest double dimension built (default RIBBONFORGE_BUDGET or 2048)")
      ->check(CLI::PositiveNumber);
}

int cmd_verify(const std::string& family, const std::vector<int>& params, const std::string& depth,
               std::uint64_t seed, const Common& c, std::ostream& out) {
  VerifyOptions o;
  o.depth = parse_depth(depth);
  o.full_bound = c.bound;
  o.budget = c.budget;
  o.seed = seed;
  const Family f = build_family(family, params);
  const VerifyRun run = run_verify(f, o);
  const std::string json = verify_json(run);
  if (!c.out_dir.empty()) write_atomic(fs::path(c.out_dir) / (file_stem(f) + "-verify.json"), json);
  out << (c.format == "json" ? json : verify_text(run));
  return run.passed() ? 0 : 1;
}

int cmd_ribbon(const std::vector<std::string>& args, const Common& c, std::ostream& out) {
  std::string family = "radford";
  std::vector<int> params;
  for (const auto& a : args) {
    if (&a == &args.front() && (a == "taft" || a == "radford")) {
      family = a;
    } else {
      params.push_back(to_int(a));
    }
  }
  const Family f = build_family(family, params);
  const DoubleData dd = build_double(f, c.budget);
  const RibbonReport rep = classify_ribbon(f, dd, c.bound);
  const std::string json = ribbon_json(f, dd, rep, c.bound);
  if (!c.out_dir.empty()) write_atomic(fs::path(c.out_dir) / (file_stem(f) + ".json"), json);
  out << (c.format == "json" ? json : ribbon_text(f, dd, rep));
  return rep.passed() ? 0 : 1;
}

struct Cell {
  int m = 0;
  int n = 0;
  std::size_t dim_d = 0;
  std::string status;  // ok, failed, error: ..., skipped: ...
  std::string origin;  // computed or cached
  std::size_t quasi = 0;
  std::size_t ribbon = 0;
  bool has_counts = false;
};

// A cached report is reused only if it parses and describes the same cell
// under the same full-depth bound.
bool load_cached(const fs::path& path, std::size_t bound, Cell& cell) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return false;
  const Json j = Json::parse(is, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return false;
  try {
    if (j.at("schema") != kReportSchema || j.at("kind") != "ribbon" || j.at("family") != "radford" ||
        j.at("m") != cell.m || j.at("n") != cell.n || j.at("full_bound") != bound) {
      return false;
    }
    cell.quasi = j.at("counts").at("quasi_ribbon").get<std::size_t>();
    cell.ribbon = j.at("counts").at("ribbon").get<std::size_t>();
    cell.status = j.at("passed").get<bool>() ? "ok" : "failed";
  } catch (const Json::exception&) {
    return false;
  }
  cell.has_counts = true;
  return true;
}

void run_cell(Cell& cell, const fs::path& dir, std::size_t bound, std::size_t budget, bool force) {
  cell.dim_d = static_cast<std::size_t>(cell.m) * cell.m * cell.n * cell.n * cell.n * cell.n;
  if (cell.dim_d > budget) {
    cell.status = "skipped: dim " + std::to_string(cell.dim_d) + " exceeds budget";
    return;
  }
  const fs::path path = dir / ("radford-" + std::to_string(cell.m) + "-" + std::to_string(cell.n) + ".json");
  if (!force && load_cached(path, bound, cell)) {
    cell.origin = "cached";
    return;
  }
  cell.origin = "computed";
  try {
    const Family f = build_radford(cell.m, cell.n);
    const DoubleData dd = build_double(f, budget);
    const RibbonReport rep = classify_ribbon(f, dd, bound);
    write_atomic(path, ribbon_json(f, dd, rep, bound));
    cell.quasi = rep.quasi_ribbon_count;
    cell.ribbon = rep.ribbon_count;
    cell.has_counts = true;
    cell.status = rep.passed() ? "ok" : "failed";
  } catch (const BudgetExceeded& e) {
    cell.status = "skipped: " + std::string(e.what());
  } catch (const VerificationFailure& e) {
    cell.status = "error: " + std::string(e.what());
  }
}

int cmd_sweep(const std::string& m_text, const std::string& n_text, bool force, unsigned jobs, const Common& c,
              std::ostream& out) {
  const IntRange mr = parse_range(m_text);
  const IntRange nr = parse_range(n_text);
  if (mr.lo < 2) throw UsageError("m must be at least 2");
  if (nr.lo < 1) throw UsageError("n must be at least 1");
  const fs::path dir = c.out_dir.empty() ? fs::path("ribbonforge-sweep") : fs::path(c.out_dir);
  fs::create_directories(dir);

  std::vector<Cell> cells;
  for (int m = mr.lo; m <= mr.hi; ++m) {
    for (int n = nr.lo; n <= nr.hi; ++n) {
      cells.emplace_back();
      cells.back().m = m;
      cells.back().n = n;
    }
  }
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(cells.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) run_cell(cells[i], dir, c.bound, c.budget, force);
    });
  }
  for (auto& t : pool) t.join();

  bool all_ok = true;
  bool law = true;
  Json index;
  index["schema"] = kReportSchema;
  index["kind"] = "sweep-index";
  index["m_range"] = {mr.lo, mr.hi};
  index["n_range"] = {nr.lo, nr.hi};
  index["budget"] = c.budget;
  index["full_bound"] = c.bound;
  Json rows = Json::array();
  for (const auto& cell : cells) {
    const std::string name = "radford(" + std::to_string(cell.m) + "," + std::to_string(cell.n) + ")";
    Json row;
    row["m"] = cell.m;
    row["n"] = cell.n;
    row["dim_d"] = cell.dim_d;
    row["status"] = cell.status;
    if (cell.has_counts) {
      const bool cell_law = (cell.quasi > 0) == (cell.n % 2 == 1) && cell.ribbon == expected_ribbon_count(cell.m, cell.n);
      law = law && cell_law;
      row["report"] = "radford-" + std::to_string(cell.m) + "-" + std::to_string(cell.n) + ".json";
      row["quasi_ribbon"] = cell.quasi;
      row["ribbon"] = cell.ribbon;
      row["expected_ribbon"] = expected_ribbon_count(cell.m, cell.n);
      row["parity_law"] = cell_law;
      out << name << ": " << cell.origin << ", quasi-ribbon " << cell.quasi << ", ribbon " << cell.ribbon
          << (cell.status == "ok" ? "" : " (" + cell.status + ")") << "\n";
    } else {
      out << name << ": " << cell.status << "\n";
    }
    if (cell.status != "ok" && cell.status.rfind("skipped", 0) != 0) all_ok = false;
    rows.push_back(std::move(row));
  }
  index["cells"] = std::move(rows);
  index["parity_law_holds"] = law;
  write_atomic(dir / "index.json", index.dump(2) + "\n");
  out << "parity law " << (law ? "holds" : "FAILS") << " on all computed cells\n";
  return all_ok && law ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hopf algebra, Drinfeld double and ribbon element computations", "ribbonforge"};
  app.require_subcommand(1);

  Common vc, rc, sc;
  std::string family, depth = "generators";
  std::vector<int> params;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "verify a family member, its dual and its double");
  verify->add_option("family", family, "radford or taft")->required();
  verify->add_option("params", params, "m n for radford, n for taft")->required();
  verify->add_option("--depth", depth, "generators or full")->check(CLI::IsMember({"generators", "full"}));
  verify->add_option("--seed", seed, "seed for the sampled identity checks");
  verify->add_option("--out", vc.out_dir, "directory for the JSON report");
  add_common(verify, vc, true);

  std::vector<std::string> ribbon_args;
  auto* ribbon = app.add_subcommand("ribbon", "classify the ribbon elements of D(R(m,n)) or D(Taft(n))");
  ribbon->add_option("args", ribbon_args, "m n, or taft n")->required()->expected(2, 3);
  ribbon->add_option("--out", rc.out_dir, "directory for the JSON report");
  add_common(ribbon, rc, true);

  std::string m_range, n_range;
  bool force = false;
  unsigned jobs = 0;
  auto* sweep = app.add_subcommand("sweep", "classify every (m, n) in a grid and write an index");
  sweep->add_option("--m", m_range, "A..B")->required();
  sweep->add_option("--n", n_range, "C..D")->required();
  sweep->add_option("--out", sc.out_dir, "report directory (default ribbonforge-sweep)");
  sweep->add_flag("--force", force, "recompute cells that already have a report");
  sweep->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");
  add_common(sweep, sc, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  try {
    for (Common* c : {&vc, &rc, &sc}) {
      if (c->budget == 0) c->budget = double_budget();
    }
    if (*verify) return cmd_verify(family, params, depth, seed, vc, out);
    if (*ribbon) return cmd_ribbon(ribbon_args, rc, out);
    return cmd_sweep(m_range, n_range, force, jobs, sc, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ribbonforge
