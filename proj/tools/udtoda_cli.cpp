// udtoda: run ultra-discrete Toda / box-ball trajectories from the command line.
//
//   udtoda toda     --input s.state --steps 10 --engine both --out-csv t.csv
//   udtoda periodic --seed 7 --steps 25 --out-svg f.svg
//   udtoda bbs      --input balls.state --engine pitman
//
// Exit codes: 0 success, 1 usage or parse error, 2 invariant violation,
// 3 engine mismatch in --engine both.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "udtoda/bbs.hpp"
#include "udtoda/ensemble.hpp"
#include "udtoda/lattice.hpp"
#include "udtoda/path_transform.hpp"
#include "udtoda/state_io.hpp"
#include "udtoda/toda.hpp"

namespace {

using namespace udtoda;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvariant = 2;
constexpr int kMismatch = 3;

struct Options {
  std::string system;
  std::string input;
  std::size_t steps = 10;
  std::string engine = "direct";
  std::string out_csv;
  std::string out_svg;
  std::uint64_t seed = 1;
  std::size_t size = 8;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Mismatch {
  std::size_t step;
  std::string detail;
};

bool use_color() { return std::getenv("TODA_NO_COLOR") == nullptr && isatty(STDERR_FILENO); }

void report(bool ok, const std::string& msg) {
  const bool color = use_color();
  const char* tag = ok ? "ok" : "MISMATCH";
  if (color) {
    std::cerr << (ok ? "\033[32m" : "\033[31m") << tag << "\033[0m: " << msg << '\n';
  } else {
    std::cerr << tag << ": " << msg << '\n';
  }
}

template <class State>
State expect_state(const AnyState& s, const char* system) {
  if (const auto* v = std::get_if<State>(&s)) return *v;
  throw UsageError(std::string("input file does not hold a '") + system + "' state");
}

template <class State>
void write_outputs(const Options& opt, const Trajectory<State>& t) {
  std::ostringstream csv;
  csv << csv_header(t.initial()) << '\n';
  for (std::size_t k = 0; k < t.states.size(); ++k) csv << csv_row(k, t.states[k]) << '\n';
  if (opt.out_csv.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream(opt.out_csv) << csv.str();
  }
  if (!opt.out_svg.empty()) std::ofstream(opt.out_svg) << render_svg(t);
}

// Runs the chosen engine(s); in "both" mode every alternative is compared
// with the first one after each step.
template <class State>
std::optional<Mismatch> run(const Options& opt, const State& initial,
                            const std::vector<std::pair<std::string, std::function<State(const State&)>>>& engines,
                            Trajectory<State>& out) {
  out.states = {initial};
  for (std::size_t k = 0; k < opt.steps; ++k) {
    const State& cur = out.states.back();
    State next = engines.front().second(cur);
    for (std::size_t j = 1; j < engines.size(); ++j) {
      State alt = engines[j].second(cur);
      if (!(alt == next)) {
        return Mismatch{k + 1, engines.front().first + " and " + engines[j].first + " disagree"};
      }
    }
    out.states.push_back(std::move(next));
  }
  return std::nullopt;
}

template <class State>
int finish(const Options& opt, const State& initial,
           std::vector<std::pair<std::string, std::function<State(const State&)>>> all) {
  std::vector<std::pair<std::string, std::function<State(const State&)>>> chosen;
  if (opt.engine == "direct") {
    chosen.push_back(all.front());
  } else if (opt.engine == "pitman") {
    chosen.push_back(all[1]);
  } else {
    chosen = std::move(all);
  }
  Trajectory<State> t;
  if (const auto bad = run(opt, initial, chosen, t)) {
    report(false, "step " + std::to_string(bad->step) + ": " + bad->detail);
    return kMismatch;
  }
  write_outputs(opt, t);
  if (chosen.size() > 1) {
    report(true, std::to_string(opt.steps) + " steps, " + std::to_string(chosen.size()) +
                     " engines agree");
  }
  return kOk;
}

int dispatch(const Options& opt) {
  ensemble::Rng rng(opt.seed);
  std::optional<AnyState> loaded;
  if (!opt.input.empty()) loaded = load_state(opt.input);

  if (opt.system == "toda") {
    const TodaState s = loaded ? expect_state<TodaState>(*loaded, "toda")
                               : ensemble::toda_state(rng, opt.size);
    return finish<TodaState>(opt, s,
                             {{"direct", [](const TodaState& x) { return toda_step(x); }},
                              {"pitman", [](const TodaState& x) {
                                 return decode(toda_transform_path(encode(x)));
                               }}});
  }
  if (opt.system == "periodic") {
    const PeriodicTodaState s = loaded ? expect_state<PeriodicTodaState>(*loaded, "periodic")
                                       : ensemble::periodic_state(rng, opt.size);
    return finish<PeriodicTodaState>(
        opt, s,
        {{"direct", [](const PeriodicTodaState& x) { return periodic_toda_step(x); }},
         {"pitman", [](const PeriodicTodaState& x) {
            return decode_periodic(toda_transform_path(encode_periodic(x)));
          }}});
  }
  const BbsState s = loaded ? expect_state<BbsState>(*loaded, "bbs")
                            : ensemble::bbs_state(rng, opt.size * 8, 1000);
  const auto isa = lattice::detect_isa();
  return finish<BbsState>(
      opt, s,
      {{"carrier", [](const BbsState& x) { return carrier_step(x); }},
       {"pitman", [](const BbsState& x) { return bbs_pitman_step(x); }},
       {std::string("lattice-") + std::string(lattice::isa_name(isa)),
        [isa](const BbsState& x) { return lattice::reflect_step(x, isa); }}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ultra-discrete Toda lattice and box-ball system simulator"};
  app.require_subcommand(1);
  Options opt;

  for (const char* name : {"toda", "periodic", "bbs"}) {
    auto* sub = app.add_subcommand(name, std::string("run the ") + name + " system");
    sub->add_option("--input", opt.input, "state file (key=value format)")->check(CLI::ExistingFile);
    sub->add_option("--steps", opt.steps, "number of time steps")->capture_default_str();
    sub->add_option("--engine", opt.engine, "direct | pitman | both")
        ->check(CLI::IsMember({"direct", "pitman", "both"}))
        ->capture_default_str();
    sub->add_option("--out-csv", opt.out_csv, "write the CSV trace here (default: stdout)");
    sub->add_option("--out-svg", opt.out_svg, "write stacked path plots here");
    sub->add_option("--seed", opt.seed, "RNG seed for a random initial state when --input is absent")
        ->capture_default_str();
    sub->add_option("--size", opt.size, "max N (toda, periodic) or max balls / 8 (bbs) for random states")
        ->capture_default_str();
    sub->callback([&opt, name] { opt.system = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    return dispatch(opt);
  } catch (const InvariantError& e) {
    std::cerr << "error: invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const StateParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ScalarParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
