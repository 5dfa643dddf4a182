// gtx: command-line driver for the graph transformation engine and the
// bundled Java-to-state-machine case.

#include "gt/engine.hpp"
#include "gt/errors.hpp"
#include "gt/formats.hpp"
#include "gt/reeng/case.hpp"
#include "gt/reeng/java.hpp"
#include "gt/tfm.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

enum Exit : int {
  ok = 0,
  differs = 1,
  usage = 2,
  input_error = 3,
  transform_failed = 4,
  step_limit = 5,
  runtime_error = 6,
};

// Raised for unreadable files and bad flag combinations.
struct InputError : gt::Error {
  using gt::Error::Error;
};
struct UsageError : gt::Error {
  using gt::Error::Error;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& p, std::string_view text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size())))
    throw InputError("cannot write " + p.string());
}

std::vector<gt::reeng::JavaSource> read_java_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw InputError(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".java") files.push_back(e.path());
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  if (files.empty()) throw InputError("no .java files in " + dir.string());
  std::vector<gt::reeng::JavaSource> out;
  for (const auto& f : files) out.push_back({f.filename().string(), read_file(f)});
  return out;
}

gt::MetamodelPtr load_metamodels(const std::vector<std::string>& files) {
  std::vector<gt::Metamodel> parts;
  for (const auto& f : files) parts.push_back(gt::parse_metamodel(read_file(f), f));
  std::vector<const gt::Metamodel*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  ptrs.push_back(&gt::trace_metamodel());
  return std::make_shared<const gt::Metamodel>(gt::Metamodel::merge(parts.front().name(), ptrs));
}

std::string seconds(std::chrono::nanoseconds ns) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << std::chrono::duration<double>(ns).count();
  return os.str();
}

struct RunReport {
  std::uint64_t seed = 0;
  int exit_status = ok;
  std::string status = "ok";
  std::string message;
  std::uint64_t steps = 0;
  std::vector<std::pair<std::string, std::chrono::nanoseconds>> phases;
  std::map<std::string, std::uint64_t, std::less<>> rule_counts;

  void add_phase(const std::string& name, std::chrono::nanoseconds d) {
    for (auto& [n, t] : phases)
      if (n == name) {
        t += d;
        return;
      }
    phases.emplace_back(name, d);
  }

  std::string text() const {
    std::ostringstream os;
    os << "status: " << status << " (exit " << exit_status << ")\n";
    if (!message.empty()) os << "message: " << message << '\n';
    os << "seed: " << seed << "\nsteps: " << steps << '\n';
    for (const auto& [n, t] : phases) os << "phase " << n << ": " << seconds(t) << " s\n";
    for (const auto& [n, c] : rule_counts) os << "rule " << n << ": " << c << '\n';
    return os.str();
  }

  std::string json() const {
    nlohmann::ordered_json j;
    j["status"] = status;
    j["exit"] = exit_status;
    if (!message.empty()) j["message"] = message;
    j["seed"] = seed;
    j["steps"] = steps;
    j["phases"] = nlohmann::ordered_json::object();
    for (const auto& [n, t] : phases) j["phases"][n] = std::chrono::duration<double>(t).count();
    j["rules"] = nlohmann::ordered_json::object();
    for (const auto& [n, c] : rule_counts) j["rules"][n] = c;
    return j.dump(2) + "\n";
  }
};

// Maps library exceptions to the documented exit codes.
int classify(const std::exception_ptr& e, std::string& status, std::string& message) {
  try {
    std::rethrow_exception(e);
  } catch (const UsageError& x) {
    status = "usage error";
    message = x.what();
    return usage;
  } catch (const gt::StepLimitExceeded& x) {
    status = "step limit exceeded";
    message = x.what();
    return step_limit;
  } catch (const gt::reeng::TransformFailed& x) {
    status = "transform failed";
    message = x.what();
    return transform_failed;
  } catch (const InputError& x) {
    status = "input error";
    message = x.what();
    return input_error;
  } catch (const gt::ParseError& x) {
    status = "parse error";
    message = x.what();
    return input_error;
  } catch (const gt::ConformanceError& x) {
    status = "conformance error";
    message = x.what();
    return input_error;
  } catch (const std::exception& x) {
    status = "runtime error";
    message = x.what();
    return runtime_error;
  }
}

struct TransformOptions {
  std::vector<std::string> metamodels;
  std::string model, java, tfm, main, out, trace, report, extract;
  std::uint64_t seed = 0;
  std::uint64_t step_limit = 10'000'000;
};

int cmd_transform(const TransformOptions& o) {
  RunReport report;
  report.seed = o.seed;
  std::optional<gt::InstanceGraph> result;
  std::ofstream trace_file;

  auto body = [&] {
    if (o.model.empty() == o.java.empty()) throw UsageError("give exactly one of --model and --java");
    if (!o.metamodels.empty() && o.tfm.empty()) throw UsageError("--metamodel needs --tfm");

    auto t0 = Clock::now();
    const bool bundled = o.tfm.empty();
    gt::MetamodelPtr mm = bundled ? gt::reeng::case_metamodel()
                          : o.metamodels.empty() ? gt::reeng::case_metamodel()
                                                 : load_metamodels(o.metamodels);
    std::optional<gt::Transformation> own;
    if (!bundled) {
      std::vector<gt::Diagnostic> warnings;
      own = gt::parse_transformation(read_file(o.tfm), mm, o.tfm, &warnings);
      for (const auto& w : warnings) std::cerr << o.tfm << ": warning: " << w.message << '\n';
    }
    const gt::Transformation& t = bundled ? gt::reeng::case_transformation() : *own;
    gt::InstanceGraph g = o.java.empty() ? gt::parse_model(read_file(o.model), mm, o.model)
                                         : gt::reeng::parse_java(read_java_dir(o.java), mm);
    if (auto problems = g.validate(); !problems.empty()) throw gt::ConformanceError(std::move(problems));
    report.add_phase("parse", Clock::now() - t0);

    gt::ExecConfig cfg;
    cfg.seed = o.seed;
    cfg.step_limit = o.step_limit;
    if (!o.trace.empty()) {
      if (fs::path(o.trace).has_parent_path()) fs::create_directories(fs::path(o.trace).parent_path());
      trace_file.open(o.trace, std::ios::binary);
      if (!trace_file) throw InputError("cannot write " + o.trace);
      cfg.trace = &trace_file;
    }
    cfg.on_unit_exit = [&](const gt::Unit& u, std::size_t depth, bool, std::chrono::nanoseconds d) {
      if (depth == 1) report.add_phase(u.name, d);
    };

    const std::string main = !o.main.empty() ? o.main : t.main ? t.main->name : std::string{};
    if (main.empty()) throw UsageError("no main unit");
    if (!t.find(main)) throw UsageError("no rule or unit named '" + main + "'");

    gt::Engine engine(t, cfg);
    t0 = Clock::now();
    const gt::ExecResult r = [&] {
      struct Finish {
        RunReport& rep;
        gt::Engine& e;
        ~Finish() {
          rep.steps = e.steps();
          rep.rule_counts = e.rule_counts();
        }
      } finish{report, engine};
      return engine.execute(g, main);
    }();
    report.add_phase("transform", Clock::now() - t0);
    if (!r.success) throw gt::reeng::TransformFailed("main unit '" + main + "' failed");

    t0 = Clock::now();
    const std::string extract = !o.extract.empty() ? o.extract : bundled ? "sm" : "";
    if (extract.empty()) {
      result.emplace(std::move(g));
    } else {
      auto it = r.outputs.find(extract);
      if (it == r.outputs.end() || !std::holds_alternative<gt::NodeId>(it->second))
        throw UsageError("main unit has no node output '" + extract + "'");
      result.emplace(gt::reeng::extract_subgraph(g, std::get<gt::NodeId>(it->second),
                                                 bundled ? gt::reeng::statemachine_metamodel() : nullptr));
    }
    const std::string text = gt::serialize_model(*result);
    if (o.out.empty()) std::cout << text;
    else write_file(o.out, text);
    report.add_phase("write", Clock::now() - t0);
  };

  try {
    body();
  } catch (...) {
    report.exit_status = classify(std::current_exception(), report.status, report.message);
  }
  if (trace_file.is_open()) trace_file.close();
  std::cerr << report.text();
  if (!o.report.empty()) {
    try {
      write_file(o.report, report.json());
    } catch (const std::exception& e) {
      std::cerr << e.what() << '\n';
      if (report.exit_status == ok) report.exit_status = input_error;
    }
  }
  return report.exit_status;
}

int guarded(const std::function<int()>& f) {
  try {
    return f();
  } catch (...) {
    std::string status, message;
    const int code = classify(std::current_exception(), status, message);
    std::cerr << status << ": " << message << '\n';
    return code;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Typed graph transformation engine"};
  app.require_subcommand(1);

  TransformOptions t;
  auto* transform = app.add_subcommand("transform", "Run a transformation on a model");
  transform->add_option("--metamodel", t.metamodels, "Metamodel files (.mm), merged in order");
  transform->add_option("--model", t.model, "Input model (.gm)");
  transform->add_option("--java", t.java, "Directory of restricted Java sources");
  transform->add_option("--tfm", t.tfm, "Transformation (.tfm); the bundled case when omitted");
  transform->add_option("--main", t.main, "Rule or unit to run instead of the declared main");
  transform->add_option("--seed", t.seed, "Seed for independent units");
  transform->add_option("--out", t.out, "Output model (.gm); stdout when omitted");
  transform->add_option("--trace", t.trace, "Write one line per rule application");
  transform->add_option("--report", t.report, "Write the run report as JSON");
  transform->add_option("--step-limit", t.step_limit, "Maximum rule and unit invocations");
  transform->add_option("--extract", t.extract,
                        "Output only the containment closure of this node output of the main unit");

  std::vector<std::string> diff_files, diff_mms;
  auto* diff = app.add_subcommand("diff", "Compare two state machines");
  diff->add_option("files", diff_files, "Two .gm files")->expected(2)->required();
  diff->add_option("--metamodel", diff_mms, "Metamodel of both files; the bundled state machine one by default");

  std::string oracle_java, oracle_out;
  auto* oracle = app.add_subcommand("oracle", "Extract a state machine without graph rewriting");
  oracle->add_option("--java", oracle_java, "Directory of restricted Java sources")->required();
  oracle->add_option("--out", oracle_out, "Output model (.gm); stdout when omitted");

  gt::reeng::GeneratorConfig gen;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a synthetic Java corpus");
  generate->add_option("--states", gen.states, "Concrete state classes")->check(CLI::PositiveNumber);
  generate->add_option("--methods", gen.methods, "Methods per state class");
  generate->add_option("--nesting", gen.nesting, "Maximum statement nesting");
  generate->add_option("--seed", gen.seed, "Generator seed");
  generate->add_option("--out", gen_out, "Output directory")->required();

  gt::reeng::GeneratorConfig bench_cfg{100, 10, 3, 42};
  int repeat = 1;
  auto* bench = app.add_subcommand("bench", "Time parse and transform on a generated corpus");
  bench->add_option("--states", bench_cfg.states, "Concrete state classes")->check(CLI::PositiveNumber);
  bench->add_option("--methods", bench_cfg.methods, "Methods per state class");
  bench->add_option("--nesting", bench_cfg.nesting, "Maximum statement nesting");
  bench->add_option("--seed", bench_cfg.seed, "Generator seed");
  bench->add_option("--repeat", repeat, "Repetitions")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  if (transform->parsed()) return cmd_transform(t);

  if (diff->parsed())
    return guarded([&] {
      gt::MetamodelPtr mm = diff_mms.empty() ? gt::reeng::statemachine_metamodel() : load_metamodels(diff_mms);
      const auto a = gt::parse_model(read_file(diff_files[0]), mm, diff_files[0]);
      const auto b = gt::parse_model(read_file(diff_files[1]), mm, diff_files[1]);
      const auto r = gt::reeng::diff_statemachines(a, b);
      std::cout << r.describe();
      return r.empty() ? ok : differs;
    });

  if (oracle->parsed())
    return guarded([&] {
      const auto g = gt::reeng::parse_java(read_java_dir(oracle_java), gt::reeng::case_metamodel());
      const std::string text = gt::serialize_model(gt::reeng::oracle_extract(g));
      if (oracle_out.empty()) std::cout << text;
      else write_file(oracle_out, text);
      return ok;
    });

  if (generate->parsed())
    return guarded([&] {
      for (const auto& src : gt::reeng::generate_model(gen)) write_file(fs::path(gen_out) / src.name, src.text);
      return ok;
    });

  if (bench->parsed())
    return guarded([&] {
      const auto sources = gt::reeng::generate_model(bench_cfg);
      std::cout << "corpus: " << bench_cfg.states << " states, " << bench_cfg.methods << " methods, nesting "
                << bench_cfg.nesting << ", seed " << bench_cfg.seed << '\n';
      for (int i = 0; i < repeat; ++i) {
        RunReport rep;
        rep.seed = bench_cfg.seed;
        auto t0 = Clock::now();
        auto g = gt::reeng::parse_java(sources, gt::reeng::case_metamodel());
        rep.add_phase("parse", Clock::now() - t0);
        gt::ExecConfig cfg;
        cfg.on_unit_exit = [&](const gt::Unit& u, std::size_t depth, bool, std::chrono::nanoseconds d) {
          if (depth == 1) rep.add_phase(u.name, d);
        };
        t0 = Clock::now();
        const auto r = gt::reeng::run_case(g, cfg);
        rep.add_phase("transform", Clock::now() - t0);
        std::chrono::nanoseconds total{};
        for (const auto& [n, d] : rep.phases)
          if (n == "parse" || n == "transform") total += d;
        std::cout << "run " << i + 1 << ": total " << seconds(total) << " s, steps " << r.steps << '\n';
        for (const auto& [n, d] : rep.phases) std::cout << "  " << n << ": " << seconds(d) << " s\n";
      }
      return ok;
    });

  return usage;
}
