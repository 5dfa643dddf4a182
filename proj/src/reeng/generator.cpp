#include "gt/reeng/case.hpp"

#include <random>
#include <sstream>

namespace gt::reeng {

namespace {

constexpr std::string_view method_names[] = {"enter", "exit", "handle", "tick", "reset",
                                             "open",  "close", "start", "stop", "pause"};
constexpr std::string_view exception_names[] = {"IOException", "TimeoutException", "IllegalStateException"};

class Generator {
public:
  explicit Generator(const GeneratorConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  std::vector<JavaSource> run() {
    const std::size_t states = std::max<std::size_t>(cfg_.states, 1);
    const std::size_t intermediates = states / 5;
    for (std::size_t i = 1; i <= states; ++i) concrete_.push_back("S" + std::to_string(i));

    std::vector<JavaSource> out;
    out.push_back({"State.java", "abstract class State {\n}\n"});
    std::vector<std::string> supers{"State"};
    for (std::size_t i = 1; i <= intermediates; ++i) {
      const std::string name = "Abstract" + std::to_string(i);
      out.push_back({name + ".java", "abstract class " + name + " extends " + supers[pick(supers.size())] + " {\n}\n"});
      supers.push_back(name);
    }
    for (const auto& name : concrete_) out.push_back({name + ".java", concrete_class(name, supers)});
    if (states >= 3) out.push_back({"Helper.java", "class Helper {\n  void help() {\n    new S1();\n  }\n}\n"});
    return out;
  }

private:
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool chance(unsigned percent) { return pick(100) < percent; }

  std::string concrete_class(const std::string& name, const std::vector<std::string>& supers) {
    std::ostringstream os;
    os << "class " << name << " extends " << supers[pick(supers.size())] << " {\n";
    for (std::size_t m = 0; m < cfg_.methods; ++m) {
      std::string method = m < std::size(method_names) ? std::string(method_names[m]) : "on" + std::to_string(m);
      os << "  " << (chance(30) ? "public " : "") << "void " << method << "() {\n";
      block(os, 0, 2);
      os << "  }\n";
    }
    os << "}\n";
    return os.str();
  }

  std::string target() {
    if (cfg_.states >= 3 && chance(5)) return "Helper";
    if (chance(5)) return "State";
    return concrete_[pick(concrete_.size())];
  }

  void block(std::ostringstream& os, std::size_t depth, std::size_t indent) {
    const std::size_t n = 1 + pick(4);
    for (std::size_t i = 0; i < n; ++i) statement(os, depth, indent + 2);
  }

  void statement(std::ostringstream& os, std::size_t depth, std::size_t indent) {
    const std::string pad(indent, ' ');
    if (depth < cfg_.nesting && chance(35)) {
      switch (pick(3)) {
      case 0:
        os << pad << "if (x" << pick(10) << " > 0) {\n";
        block(os, depth + 1, indent);
        if (chance(50)) {
          os << pad << "} else {\n";
          block(os, depth + 1, indent);
        }
        os << pad << "}\n";
        return;
      case 1: {
        os << pad << "switch (event) {\n";
        const std::size_t cases = 1 + pick(3);
        for (std::size_t c = 0; c < cases; ++c) {
          os << pad << "  case EV" << ++labels_ << ":\n";
          block(os, depth + 1, indent + 2);
          os << pad << "    break;\n";
        }
        os << pad << "}\n";
        return;
      }
      default:
        os << pad << "try {\n";
        block(os, depth + 1, indent);
        const bool with_finally = chance(40);
        const std::size_t catches = with_finally ? pick(2) : 1 + pick(2);
        for (std::size_t c = 0; c < catches; ++c) {
          os << pad << "} catch (" << exception_names[pick(std::size(exception_names))] << " e) {\n";
          block(os, depth + 1, indent);
        }
        if (with_finally) {
          os << pad << "} finally {\n";
          block(os, depth + 1, indent);
        }
        os << pad << "}\n";
        return;
      }
    }
    const auto roll = pick(100);
    if (roll < 55) os << pad << "new " << target() << "();\n";
    else if (roll < 90) os << pad << "send(\"msg" << pick(20) << "\");\n";
    else os << pad << "log(\"note\");\n";
  }

  GeneratorConfig cfg_;
  std::mt19937_64 rng_;
  std::vector<std::string> concrete_;
  std::size_t labels_ = 0;
};

} // namespace

std::vector<JavaSource> generate_model(const GeneratorConfig& cfg) { return Generator(cfg).run(); }

} // namespace gt::reeng
