// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Usage: acceptance <path-to-gtx>

#include "support/support.hpp"

#include "gt/errors.hpp"
#include "gt/formats.hpp"
#include "gt/reeng/case.hpp"
#include "gt/tfm.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace gt;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using gt::testing::asset_path;
using gt::testing::canon;
using gt::testing::read_text;

namespace {

// Pinned tolerances.
constexpr double kGoldenSeconds = 1.0;
constexpr double kSweepSeconds = 60.0;
constexpr double kBigTargetSeconds = 5.0;
constexpr double kBigHardSeconds = 10.0;
constexpr int kSweepSeeds = 200;
constexpr int kMatcherCases = 500;
constexpr int kUnitTrees = 300;
constexpr int kAmalgamationMachines = 200;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<reeng::JavaSource> read_java_dir(const std::string& dir) {
  std::vector<reeng::JavaSource> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".java") out.push_back({e.path().filename().string(), read_text(e.path().string())});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

// 1 -----------------------------------------------------------------------

Outcome golden() {
  Outcome o;
  const auto t0 = Clock::now();
  InstanceGraph model = reeng::parse_java(read_java_dir(asset_path("small")), reeng::case_metamodel());
  const auto result = reeng::run_case(model);
  const double secs = seconds_since(t0);
  const InstanceGraph expected =
      parse_model(read_text(asset_path("small/expected.gm")), reeng::statemachine_metamodel(), "expected.gm");
  const auto d = reeng::diff_statemachines(result.machine, expected);
  if (!d.empty()) o.fail("diff against golden:\n" + d.describe());
  if (secs >= kGoldenSeconds) o.fail("runtime " + std::to_string(secs) + " s");
  o.detail = o.pass ? "empty diff, " + std::to_string(secs) + " s" : o.detail;
  return o;
}

// 2 -----------------------------------------------------------------------

Outcome oracle_sweep() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int seed = 0; seed < kSweepSeeds && o.pass; ++seed) {
    gt::testing::Rng rng(static_cast<std::uint64_t>(seed));
    reeng::GeneratorConfig cfg;
    cfg.states = 3 + rng() % 28;
    cfg.methods = 1 + rng() % 5;
    cfg.nesting = rng() % 4;
    cfg.seed = static_cast<std::uint64_t>(seed);
    InstanceGraph model = reeng::parse_java(reeng::generate_model(cfg), reeng::case_metamodel());
    const InstanceGraph expected = reeng::oracle_extract(model);
    const auto d = reeng::diff_statemachines(reeng::run_case(model).machine, expected);
    if (!d.empty()) o.fail("seed " + std::to_string(seed) + ":\n" + d.describe());
  }
  const double secs = seconds_since(t0);
  if (secs >= kSweepSeconds) o.fail("runtime " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(kSweepSeeds) + " corpora agree, " + std::to_string(secs) + " s";
  return o;
}

// 3 -----------------------------------------------------------------------

Outcome performance() {
  Outcome o;
  reeng::GeneratorConfig cfg;
  cfg.states = 100;
  cfg.methods = 10;
  cfg.nesting = 3;
  cfg.seed = 42;
  const auto sources = reeng::generate_model(cfg);

  std::vector<std::pair<std::string, double>> phases;
  const auto t0 = Clock::now();
  InstanceGraph model = reeng::parse_java(sources, reeng::case_metamodel());
  const double parse = seconds_since(t0);
  ExecConfig ec;
  ec.on_unit_exit = [&](const Unit& u, std::size_t depth, bool, std::chrono::nanoseconds d) {
    if (depth == 1) phases.emplace_back(u.name, std::chrono::duration<double>(d).count());
  };
  const auto t1 = Clock::now();
  reeng::run_case(model, ec);
  const double transform = seconds_since(t1);
  const double total = parse + transform;

  std::ostringstream os;
  os << "total " << total << " s (parse " << parse << ", transform " << transform;
  for (const auto& [n, s] : phases) os << ", " << n << " " << s;
  os << ")";
  if (total >= kBigHardSeconds)
    o.fail("hard limit exceeded: " + os.str());
  else if (total >= kBigTargetSeconds)
    o.fail("over target: " + os.str());
  else
    o.detail = os.str();
  return o;
}

// 4 -----------------------------------------------------------------------

Outcome matcher() {
  Outcome o;
  gt::testing::Rng rng(20240501);
  int nonempty = 0, conditioned = 0;
  for (int i = 0; i < kMatcherCases && o.pass; ++i) {
    const InstanceGraph g = gt::testing::random_graph(rng, 8);
    const auto rr = gt::testing::random_rule(rng, g, 4);
    std::vector<std::string> want, got;
    for (const auto& m : gt::testing::brute_force_matches(g, rr.rule, rr.pre)) want.push_back(gt::testing::describe(m));
    for (const auto& m : find_matches(g, rr.rule, rr.pre)) got.push_back(gt::testing::describe(m));
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) o.fail("case " + std::to_string(i) + " disagrees");
    if (!want.empty()) ++nonempty;
    if (rr.rule.condition->kind() != Condition::Kind::True) ++conditioned;
  }
  if (o.pass)
    o.detail = std::to_string(kMatcherCases) + " cases, " + std::to_string(nonempty) + " with matches, " +
               std::to_string(conditioned) + " with conditions";
  return o;
}

// 5 -----------------------------------------------------------------------

const char* const unit_tfm = R"(
transformation acceptance; import tm; main Noop;
rule createB() { node b : B <<create>>; }
rule deleteC() { node c : C <<delete>>; }
rule fail() { node d : D { attr n = 99; } }
rule bump(v) {
  node b : B { attr n = v; attr n = check(self < 3); }
  assign b.n = v + 1;
}
rule link() {
  node b : B;
  node c : C;
  edge b -next-> c <<forbid>>;
  edge b -next-> c <<create>>;
}
rule unlink() {
  node b : B;
  node c : C;
  edge b -next-> c <<delete>>;
}
unit sequential Noop() { do fail; }
)";

struct TreeGen {
  gt::testing::Rng& rng;
  Transformation& t;
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

  CallTarget leaf() {
    const char* const names[] = {"createB", "deleteC", "fail", "bump", "link", "unlink"};
    return *t.find(names[pick(6)]);
  }

  CallTarget add(Unit u) {
    u.name = "U" + std::to_string(t.units.size());
    t.units.push_back(std::move(u));
    return {CallTarget::Kind::Unit, t.units.size() - 1, t.units.back().name};
  }

  CallTarget tree(int depth) {
    if (depth == 0 || pick(4) == 0) return leaf();
    Unit u;
    const UnitKind kinds[] = {UnitKind::Sequential, UnitKind::Priority, UnitKind::Counted, UnitKind::Conditional,
                              UnitKind::Independent};
    u.kind = kinds[pick(5)];
    switch (u.kind) {
    case UnitKind::Counted:
      u.count = static_cast<std::int64_t>(pick(4)) - 1;
      u.children.push_back(tree(depth - 1));
      break;
    case UnitKind::Conditional:
      for (std::size_t i = 0, n = 2 + pick(2); i < n; ++i) u.children.push_back(tree(depth - 1));
      break;
    default:
      for (std::size_t i = 0, n = 1 + pick(3); i < n; ++i) u.children.push_back(tree(depth - 1));
    }
    return add(std::move(u));
  }
};

Outcome transactionality() {
  Outcome o;
  gt::testing::Rng rng(777);
  const Transformation base = parse_transformation(unit_tfm, gt::testing::test_metamodel());
  int failures = 0, counted_runs = 0, cond_failed = 0, aborted = 0;
  for (int trial = 0; trial < kUnitTrees && o.pass; ++trial) {
    Transformation t = base;
    TreeGen gen{rng, t};
    const CallTarget root = gen.tree(3);
    const CallTarget cond = gen.tree(2);
    const CallTarget then = gen.tree(2);
    Unit c;
    c.kind = UnitKind::Conditional;
    c.children = {cond, then};
    const CallTarget no_else = gen.add(std::move(c));
    Unit k;
    k.kind = UnitKind::Counted;
    k.count = -1;
    k.children = {root};
    const CallTarget drain = gen.add(std::move(k));

    const InstanceGraph start = gt::testing::random_graph(rng, 6);
    const std::string before = canon(start);
    ExecConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(trial);
    cfg.step_limit = 2000;
    const std::string tag = "trial " + std::to_string(trial) + ": ";

    // Every Counted(-1) unit that returns must report success.
    cfg.on_unit_exit = [&](const Unit& u, std::size_t, bool ok, std::chrono::nanoseconds) {
      if (u.kind == UnitKind::Counted && u.count == -1) {
        ++counted_runs;
        if (!ok) o.fail(tag + "Counted(-1) unit " + u.name + " failed");
      }
    };

    const auto run = [&](const CallTarget& target, InstanceGraph& g) -> std::optional<bool> {
      try {
        return Engine(t, cfg).execute(g, target).success;
      } catch (const StepLimitExceeded&) {
        ++aborted;
        if (canon(g) != before) o.fail(tag + "step-limit abort left changes");
        return std::nullopt;
      }
    };

    InstanceGraph g = start;
    const auto ok = run(root, g);
    if (g.open_checkpoints() != 0) o.fail(tag + "checkpoint left open");
    if (ok && !*ok) {
      ++failures;
      if (canon(g) != before) o.fail(tag + "failed unit changed the graph");
    }

    g = start;
    const auto cond_ok = run(cond, g);
    if (cond_ok && !*cond_ok) {
      ++cond_failed;
      InstanceGraph h = start;
      const auto r = run(no_else, h);
      if (r && *r) o.fail(tag + "conditional without else succeeded after its condition failed");
      if (r && canon(h) != before) o.fail(tag + "failed conditional changed the graph");
    }

    g = start;
    run(drain, g);
  }
  if (failures < 30 || counted_runs < 30 || cond_failed < 30)
    o.fail("too few exercised cases: failures " + std::to_string(failures) + ", counted " +
           std::to_string(counted_runs) + ", failed conditions " + std::to_string(cond_failed));
  if (o.pass)
    o.detail = std::to_string(kUnitTrees) + " trees, " + std::to_string(failures) + " failing, " +
               std::to_string(counted_runs) + " Counted(-1) exits, " + std::to_string(cond_failed) +
               " failed conditions, " + std::to_string(aborted) + " step-limit aborts";
  return o;
}

// 6 -----------------------------------------------------------------------

int run_gtx(const std::string& gtx, const std::string& args) {
  const std::string cmd = gtx + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism(const std::string& gtx) {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("gtx_accept_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto p = [&](const std::string& n) { return (dir / n).string(); };

  if (run_gtx(gtx, "generate --states 20 --methods 4 --nesting 3 --seed 3 --out " + p("java")) != 0) {
    o.fail("generate failed");
    return o;
  }
  for (const char* run : {"a", "b"}) {
    const std::string s(run);
    if (run_gtx(gtx, "transform --java " + p("java") + " --seed 42 --out " + p(s + ".gm") + " --trace " +
                         p(s + ".trace")) != 0)
      o.fail("transform run " + s + " failed");
  }
  if (o.pass && read_text(p("a.gm")) != read_text(p("b.gm"))) o.fail("outputs differ");
  if (o.pass && read_text(p("a.trace")) != read_text(p("b.trace"))) o.fail("traces differ");

  for (int seed : {0, 1, 7, 99, 12345}) {
    if (!o.pass) break;
    const std::string out = p("s" + std::to_string(seed) + ".gm");
    if (run_gtx(gtx, "transform --java " + p("java") + " --seed " + std::to_string(seed) + " --out " + out) != 0)
      o.fail("transform with seed " + std::to_string(seed) + " failed");
    else if (read_text(out) != read_text(p("a.gm")))
      o.fail("seed " + std::to_string(seed) + " changed the state machine");
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = "byte-identical output and trace; 5 seeds give the same machine";
  return o;
}

// 7 -----------------------------------------------------------------------

const char* const rename_tfm = R"(
transformation rename; import statemachine; main RenameAll;
rule machine(in sm) { node m : StateMachine bind sm; }
rule rename(v) {
  node m : StateMachine;
  node s : State { attr name = v; }
  edge m -states-> s;
  assign s.name = v + "_r";
}
unit amalgamation RenameAll(in sm) {
  kernel machine;
  multi rename embed m -> m;
  map sm -> machine.sm;
}
)";

InstanceGraph random_machines(gt::testing::Rng& rng, NodeId& target) {
  InstanceGraph g(reeng::statemachine_metamodel());
  const char* const names[] = {"Idle", "Busy", "Open", "Closed", "Done"};
  for (int machine = 0; machine < 2; ++machine) {
    const NodeId m = g.create_node("StateMachine");
    if (machine == 0) target = m;
    std::vector<NodeId> states;
    for (std::size_t i = 0, n = rng() % 11; i < n; ++i) {
      const NodeId s = g.create_node("State");
      // Duplicates and a shared name across machines are deliberate.
      g.set_attribute(s, "name", Value(std::string(names[rng() % 5]) + std::to_string(rng() % 3)));
      g.add_edge(m, "states", s);
      states.push_back(s);
    }
    for (std::size_t i = 0, n = states.empty() ? 0 : rng() % 6; i < n; ++i) {
      const NodeId tr = g.create_node("Transition");
      g.add_edge(m, "transitions", tr);
      g.add_edge(tr, "source", states[rng() % states.size()]);
      g.add_edge(tr, "target", states[rng() % states.size()]);
      g.set_attribute(tr, "trigger", Value("t" + std::to_string(i)));
    }
  }
  return g;
}

Outcome amalgamation() {
  Outcome o;
  gt::testing::Rng rng(99);
  const Transformation t = parse_transformation(rename_tfm, reeng::statemachine_metamodel());
  std::size_t renamed = 0;
  for (int trial = 0; trial < kAmalgamationMachines && o.pass; ++trial) {
    NodeId m;
    const InstanceGraph start = random_machines(rng, m);

    InstanceGraph expected = start;
    for (NodeId s : expected.targets(m, "states")) {
      expected.set_attribute(s, "name", Value(expected.attribute(s, "name").as_string() + "_r"));
      ++renamed;
    }

    for (bool shuffle : {false, true}) {
      ExecConfig cfg;
      cfg.seed = static_cast<std::uint64_t>(trial);
      cfg.shuffle_multi_matches = shuffle;
      InstanceGraph g = start;
      const auto r = Engine(t, cfg).execute(g, "RenameAll", {{"sm", m}});
      if (!r.success) o.fail("trial " + std::to_string(trial) + ": unit failed");
      else if (canon(g) != canon(expected)) o.fail("trial " + std::to_string(trial) + ": result differs from oracle");
    }

    // A kernel without a match fails as a whole and leaves the graph alone.
    InstanceGraph g = start;
    const NodeId state = g.create_node("State");
    const std::string before = canon(g);
    bool threw = false, ok = true;
    try {
      ok = Engine(t).execute(g, "RenameAll", {{"sm", state}}).success;
    } catch (const Error&) {
      threw = true;
    }
    if ((!threw && ok) || canon(g) != before) o.fail("trial " + std::to_string(trial) + ": kernel mismatch applied");
  }
  if (o.pass)
    o.detail = std::to_string(kAmalgamationMachines) + " machines, " + std::to_string(renamed) + " states renamed";
  return o;
}

} // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <gtx>\n";
    return 2;
  }
  const std::string gtx = argv[1];

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"golden small corpus", golden},
      {"oracle equivalence sweep", oracle_sweep},
      {"performance 100x10x3", performance},
      {"matcher vs brute force", matcher},
      {"transactionality", transactionality},
      {"determinism", [&] { return determinism(gtx); }},
      {"amalgamation rename", amalgamation},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].name << ": " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
