// span2 — command-line front end for the span2 shared library.
//
// compose: hcompose two spans (pullback), two cospans (pushout), or two
//          2-cells (vertical composition) loaded from JSON files.
// limit:   limit of a JSON diagram, bounded by SPAN2_MAX_APEX.
// verify:  run the coherence suite over randomized instances.
// demo:    run the suite in the cospan (toy cobordism) direction.
//
// Exit status: 0 on success with every check passed, 1 when a law fails,
// 2 on usage or input errors.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "span2/span2.h"

namespace {

constexpr std::uint64_t kDefaultMaxApex = 10000;

struct CliError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{path + ": cannot open file"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void check(span2_status status, const std::string& context) {
  if (status != SPAN2_OK) {
    throw CliError{context + ": " + span2_status_name(status) + ": " +
                   span2_last_error()};
  }
}

std::string take_string(char* text) {
  std::string out(text);
  span2_string_free(text);
  return out;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw CliError{output_path + ": cannot open for writing"};
  out << text;
}

std::uint64_t max_apex_bound() {
  const char* env = std::getenv("SPAN2_MAX_APEX");
  if (env == nullptr || *env == '\0') return kDefaultMaxApex;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw CliError{std::string("SPAN2_MAX_APEX: not a number: ") + env};
  }
  return value;
}

using ValuePtr = std::unique_ptr<span2_value, decltype(&span2_value_free)>;

ValuePtr parse_file(const std::string& path) {
  std::string text = read_file(path);
  span2_value* raw = nullptr;
  check(span2_value_parse(text.c_str(), &raw), path);
  return ValuePtr(raw, &span2_value_free);
}

int run_compose(const std::string& a_path, const std::string& b_path,
                const std::string& format, const std::string& output) {
  ValuePtr a = parse_file(a_path);
  ValuePtr b = parse_file(b_path);
  span2_value* composed = nullptr;
  check(span2_value_compose(a.get(), b.get(), &composed),
        a_path + " ; " + b_path);
  ValuePtr result(composed, &span2_value_free);
  char* text = nullptr;
  if (format == "text") {
    check(span2_value_to_text(result.get(), &text), "render");
  } else {
    check(span2_value_to_json(result.get(), 2, &text), "render");
  }
  emit(take_string(text), output);
  return 0;
}

int run_limit(const std::string& path, const std::string& format,
              const std::string& output) {
  std::string diagram = read_file(path);
  std::uint64_t bound = max_apex_bound();
  char* text = nullptr;
  if (format == "text") {
    check(span2_limit_text(diagram.c_str(), bound, &text), path);
  } else {
    check(span2_limit_json(diagram.c_str(), bound, 2, &text), path);
  }
  emit(take_string(text), output);
  return 0;
}

int emit_reports(span2_reports* raw, const std::string& format,
                 const std::string& output) {
  std::unique_ptr<span2_reports, decltype(&span2_reports_free)> reports(
      raw, &span2_reports_free);
  char* text = nullptr;
  if (format == "text") {
    check(span2_reports_to_text(reports.get(), &text), "render");
  } else {
    check(span2_reports_to_json(reports.get(), 2, &text), "render");
  }
  emit(take_string(text), output);
  return span2_reports_all_passed(reports.get()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"span bicategory toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  auto add_io_options = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("--output", output,
                    "Write output to a file instead of stdout");
  };

  std::string compose_a;
  std::string compose_b;
  auto* compose =
      app.add_subcommand("compose", "Compose two spans, cospans or 2-cells");
  compose->add_option("a", compose_a, "First factor (JSON file)")->required();
  compose->add_option("b", compose_b, "Second factor (JSON file)")->required();
  add_io_options(compose);

  std::string limit_path;
  auto* limit = app.add_subcommand("limit", "Limit of a finite diagram");
  limit->add_option("diagram", limit_path, "Diagram (JSON file)")->required();
  add_io_options(limit);

  std::uint64_t seed = 0;
  std::uint32_t max_obj = 3;
  std::uint32_t trials = 50;
  auto* verify = app.add_subcommand("verify", "Check the coherence laws");
  verify->add_option("--seed", seed, "Generator seed")->capture_default_str();
  verify->add_option("--max-obj", max_obj, "Largest object size")
      ->capture_default_str();
  verify->add_option("--trials", trials, "Instances per law")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_io_options(verify);

  std::uint32_t circles_in = 2;
  std::uint32_t circles_out = 1;
  auto* demo = app.add_subcommand("demo", "Toy cobordism run (cospan side)");
  demo->add_option("--seed", seed, "Generator seed")->capture_default_str();
  demo->add_option("--circles-in", circles_in, "Incoming boundary components")
      ->capture_default_str();
  demo->add_option("--circles-out", circles_out, "Outgoing boundary components")
      ->capture_default_str();
  add_io_options(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compose->parsed()) {
      return run_compose(compose_a, compose_b, format, output);
    }
    if (limit->parsed()) {
      return run_limit(limit_path, format, output);
    }
    if (verify->parsed()) {
      span2_reports* reports = nullptr;
      check(span2_verify(seed, max_obj, trials, &reports), "verify");
      return emit_reports(reports, format, output);
    }
    if (demo->parsed()) {
      span2_reports* reports = nullptr;
      check(span2_demo(seed, circles_in, circles_out, &reports), "demo");
      return emit_reports(reports, format, output);
    }
  } catch (const CliError& e) {
    std::cerr << "span2: error: " << e.message << "\n";
    return 2;
  }
  return 2;
}
