// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
//
//   acceptance --golden DIR --cli PATH --workdir DIR

#include <sys/wait.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "udtoda/bbs.hpp"
#include "udtoda/ensemble.hpp"
#include "udtoda/lattice.hpp"
#include "udtoda/path_transform.hpp"
#include "udtoda/state_io.hpp"
#include "udtoda/toda.hpp"

namespace fs = std::filesystem;
using namespace udtoda;

namespace {

struct Context {
  fs::path golden;
  std::string cli;
  fs::path workdir;
};

// Returns an empty string on success, else a description of the first failure.
using Check = std::function<std::string(const Context&)>;

constexpr std::uint64_t kSeed = 20240601;

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string crit1(const Context&) {
  ensemble::Rng rng(kSeed);
  for (int i = 0; i < 1000; ++i) {
    TodaState s = ensemble::toda_state(rng, 20, 1000);
    for (int k = 0; k < 10; ++k) {
      const TodaState direct = toda_step(s);
      if (decode(toda_transform_path(encode(s))) != direct) {
        return "state " + std::to_string(i) + " step " + std::to_string(k + 1) + ": " + format_state(s);
      }
      s = direct;
    }
  }
  return {};
}

std::string crit2(const Context&) {
  ensemble::Rng rng(kSeed + 1);
  for (int i = 0; i < 1000; ++i) {
    PeriodicTodaState s = ensemble::periodic_state(rng, 20, 1000);
    const Scalar length = s.circumference();
    for (int k = 0; k < 10; ++k) {
      const PeriodicTodaState direct = periodic_toda_step(s);
      if (decode_periodic(toda_transform_path(encode_periodic(s))) != direct) {
        return "state " + std::to_string(i) + " step " + std::to_string(k + 1) + ": " + format_state(s);
      }
      // The constructor re-checks sum Q + sum E = L and sum Q < L/2.
      if (direct.circumference() != length) return "circumference changed at state " + std::to_string(i);
      s = direct;
    }
  }
  return {};
}

std::string crit3(const Context&) {
  ensemble::Rng rng(kSeed);  // same finite ensemble as criterion 1
  for (int i = 0; i < 1000; ++i) {
    TodaState s = ensemble::toda_state(rng, 20, 1000);
    for (int k = 0; k < 10; ++k) {
      const auto p = encode(s);
      if (breakpoint_map(p) != toda_transform_path(p).intervals()) {
        return "state " + std::to_string(i) + " step " + std::to_string(k) + ": " + format_state(s);
      }
      s = toda_step(s);
    }
  }
  return {};
}

std::string crit4(const Context&) {
  ensemble::Rng rng(kSeed + 2);
  for (int i = 0; i < 200; ++i) {
    const auto s = ensemble::toda_state(rng, 20, 1000);
    for (const auto& x : run_trajectory(s, 100).states) {
      if (total_mass(x) != total_mass(s)) return "finite state " + std::to_string(i);
    }
    const auto p = ensemble::periodic_state(rng, 20, 1000);
    for (const auto& x : run_trajectory(p, 100).states) {
      if (total_mass(x) != total_mass(p)) return "periodic state " + std::to_string(i);
    }
  }
  return {};
}

std::string crit5(const Context&) {
  ensemble::Rng rng(kSeed + 3);
  const auto isa = lattice::detect_isa();
  for (int i = 0; i < 1000; ++i) {
    const auto b = ensemble::bbs_state(rng, 200, 1000);
    const auto carrier = carrier_step(b);
    if (bbs_pitman_step(b) != carrier) return "pitman route differs at state " + std::to_string(i);
    if (lattice::reflect_step(b, isa) != carrier) return "dense kernel differs at state " + std::to_string(i);
    if (carrier.count() != b.count()) return "ball count changed at state " + std::to_string(i);
  }
  return {};
}

std::string crit6(const Context&) {
  ensemble::Rng rng(kSeed + 4);
  for (int i = 0; i < 500; ++i) {
    const PLPath s = ensemble::pl_path(rng, 7, 5);
    const PLPath ts = pitman_pl(s);
    const auto ds = extract_toda_data(s);
    const auto dt = extract_toda_data(ts);
    const std::string where = "path " + std::to_string(i) + ": " + format_state(s);
    if (dt.first_max != s.local_minima().front().x) return "a_1(TS) != b_1(S) for " + where;
    for (const auto* path : {&s, &ts}) {
      for (const auto& v : path->vertices()) {
        if (total_variation(ts, v.x) != total_variation(s, v.x)) return "total variation differs for " + where;
      }
    }
    const TodaState next = toda_step(TodaState(ds.q, ds.e));
    if (dt.q != next.q() || dt.e != next.e()) return "Toda data mismatch for " + where;
  }
  return {};
}

template <class State, class Step>
std::string compare_csv(const fs::path& state_file, const fs::path& csv_file, Step step) {
  const auto s = std::get<State>(load_state(state_file));
  std::istringstream csv(read_file(csv_file));
  std::string line;
  std::getline(csv, line);
  if (line != csv_header(s)) return csv_file.filename().string() + ": header";
  State cur = s;
  for (std::size_t k = 0; std::getline(csv, line); ++k) {
    if (line != csv_row(k, cur)) return csv_file.filename().string() + " row " + std::to_string(k);
    cur = step(cur);
  }
  return {};
}

std::string crit7(const Context& ctx) {
  std::size_t checked = 0;
  for (const auto& entry : fs::directory_iterator(ctx.golden)) {
    if (entry.path().extension() != ".csv") continue;
    auto state = entry.path();
    state.replace_extension(".state");
    const std::string name = entry.path().stem().string();
    std::string err;
    if (name.starts_with("toda_")) {
      err = compare_csv<TodaState>(state, entry.path(), [](const TodaState& x) { return toda_step(x); });
    } else if (name.starts_with("periodic_")) {
      err = compare_csv<PeriodicTodaState>(state, entry.path(),
                                           [](const PeriodicTodaState& x) { return periodic_toda_step(x); });
    } else if (name.starts_with("bbs_")) {
      err = compare_csv<BbsState>(state, entry.path(), [](const BbsState& x) { return bbs_pitman_step(x); });
    }
    if (!err.empty()) return err;
    ++checked;
  }
  if (checked < 9) return "expected at least 9 CSV fixtures, found " + std::to_string(checked);

  const auto pl = nlohmann::json::parse(read_file(ctx.golden / "pl_5seg.json"));
  const PLPath s = std::get<PLPath>(load_state(ctx.golden / "pl_5seg.state"));
  const PLPath ts = pitman_pl(s);
  std::vector<Vertex> maxima, minima;
  for (const auto& e : pl.at("pitman_extrema")) {
    const Vertex v{Scalar::parse(e[1].get<std::string>()), Scalar::parse(e[2].get<std::string>())};
    (e[0] == "max" ? maxima : minima).push_back(v);
  }
  if (ts.local_maxima() != maxima || ts.local_minima() != minima) return "pl_5seg extrema";
  const auto d = extract_toda_data(ts);
  if (d.first_max.str() != pl.at("a1").get<std::string>()) return "pl_5seg a1";
  for (std::size_t n = 0; n < d.q.size(); ++n) {
    if (d.q[n].str() != pl.at("Q").at(n).get<std::string>()) return "pl_5seg Q";
  }
  for (std::size_t n = 0; n < d.e.size(); ++n) {
    if (d.e[n].str() != pl.at("E").at(n).get<std::string>()) return "pl_5seg E";
  }
  for (const auto& [x, pair] : pl.at("total_variation").items()) {
    const Scalar at = Scalar::parse(x);
    if (total_variation(s, at).str() != pair[0] || total_variation(ts, at).str() != pair[1]) {
      return "pl_5seg total variation at " + x;
    }
  }

  const auto maps = nlohmann::json::parse(read_file(ctx.golden / "toda_transform_sampled.json"));
  for (const auto& [key, expect] : maps.items()) {
    const auto semi = key.find(';');
    const std::string text = "type=toda\nQ=" + key.substr(0, semi) +
                             (semi == std::string::npos ? "" : "\nE=" + key.substr(semi + 1));
    const auto p = encode(std::get<TodaState>(parse_state(text)));
    const auto got = toda_transform_path(p).intervals();
    if (got.size() != expect.size() || got != breakpoint_map(p)) return "transform fixture " + key;
    for (std::size_t n = 0; n < got.size(); ++n) {
      if (got[n].a.str() != expect[n][0] || got[n].b.str() != expect[n][1]) return "transform fixture " + key;
    }
  }
  return {};
}

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

std::string crit8(const Context& ctx) {
  std::size_t runs = 0;
  for (const auto& entry : fs::directory_iterator(ctx.golden)) {
    if (entry.path().extension() != ".state") continue;
    const std::string name = entry.path().stem().string();
    std::string system;
    if (name.starts_with("toda_")) system = "toda";
    if (name.starts_with("periodic_")) system = "periodic";
    if (name.starts_with("bbs_")) system = "bbs";
    if (system.empty()) continue;  // general-slope fixtures have no CLI engine
    const auto csv = ctx.workdir / ("acceptance_" + name + ".csv");
    const std::string cmd = quote(ctx.cli) + " " + system + " --input " + quote(entry.path().string()) +
                            " --engine both --steps 100 --out-csv " + quote(csv.string()) + " 2>/dev/null";
    const int rc = run_command(cmd);
    if (rc != 0) return name + ": exit code " + std::to_string(rc);
    ++runs;
  }
  if (runs < 9) return "expected at least 9 CLI fixtures, ran " + std::to_string(runs);

  const auto svg = ctx.workdir / "acceptance_periodic.svg";
  const auto csv = ctx.workdir / "acceptance_periodic.csv";
  const std::string cmd = quote(ctx.cli) + " periodic --seed 7 --steps 25 --out-svg " + quote(svg.string()) +
                          " --out-csv " + quote(csv.string()) + " 2>/dev/null";
  const int rc = run_command(cmd);
  if (rc != 0) return "periodic SVG run: exit code " + std::to_string(rc);
  const std::string text = read_file(svg);
  const std::regex re("<polyline class=\"trace\"");
  const auto traces = std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator());
  if (traces != 26) return "periodic SVG has " + std::to_string(traces) + " traces, expected 26";
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"udtoda acceptance suite"};
  Context ctx;
  std::string golden, workdir;
  app.add_option("--golden", golden, "golden fixture directory")->required()->check(CLI::ExistingDirectory);
  app.add_option("--cli", ctx.cli, "path to the udtoda executable")->required()->check(CLI::ExistingFile);
  app.add_option("--workdir", workdir, "scratch directory for CLI outputs")->required();
  CLI11_PARSE(app, argc, argv);
  ctx.golden = golden;
  ctx.workdir = workdir;
  fs::create_directories(ctx.workdir);

  const std::vector<std::pair<const char*, Check>> criteria = {
      {"1 finite path route equals toda_step (1000 states x 10 steps)", crit1},
      {"2 periodic path route equals periodic_toda_step (1000 states x 10 steps)", crit2},
      {"3 breakpoint_map equals toda_transform_path breakpoints", crit3},
      {"4 mass conserved over 100-step trajectories", crit4},
      {"5 carrier equals Pitman and dense kernel (1000 ball sets)", crit5},
      {"6 general-slope Pitman: first max, total variation, Toda data (500 paths)", crit6},
      {"7 golden fixtures reproduced by the library", crit7},
      {"8 CLI --engine both --steps 100 on fixtures, 26 SVG traces", crit8},
  };

  int failures = 0;
  for (const auto& [label, check] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = check(ctx);
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (err.empty() ? "PASS" : "FAIL") << "  criterion " << label << "  (" << std::fixed
         << std::setprecision(2) << secs << " s)";
    if (!err.empty()) line << "\n      " << err;
    std::cout << line.str() << std::endl;
    failures += err.empty() ? 0 : 1;
  }
  std::cout << (failures ? "acceptance: FAILED (" + std::to_string(failures) + ")" : std::string("acceptance: all criteria pass"))
            << std::endl;
  return failures ? 1 : 0;
}
