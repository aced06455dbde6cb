// intcat: validate, run or explain a category description document.
//
// Exit status: 0 when the engine ran (refusals included), 1 when the input
// cannot be read or parsed, 2 on an engine fault.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "intcat/cli/report.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace intcat::cli;
  CLI::App app{"Internal category theory over finite presheaf ambients"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string tasks;
  std::string format = "human";
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "Document path, '-' for stdin")->required();
  };
  auto add_run = [&](CLI::App* sub) {
    sub->add_option("-f,--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--seed", opt.seed, "Seed for sampled checks");
    sub->add_option("--max-carrier", opt.max_carrier, "Largest total carrier size of a declared presheaf");
    sub->add_option("--max-index", opt.max_index, "Test objects for stability checks")->check(CLI::Range(1, 64));
  };

  auto* validate = app.add_subcommand("validate", "Parse and build every declaration");
  add_common(validate);
  add_run(validate);
  auto* run_cmd = app.add_subcommand("run", "Run the document's tasks");
  add_common(run_cmd);
  add_run(run_cmd);
  run_cmd->add_option("-t,--task", tasks, "Comma-separated task names to run");
  auto* explain_cmd = app.add_subcommand("explain", "Describe declarations and tasks without running them");
  add_common(explain_cmd);

  CLI11_PARSE(app, argc, argv);

  std::string text;
  SpecDocument doc;
  try {
    text = read_input(input);
    doc = parse(text);
  } catch (const ParseError& e) {
    std::cerr << input << ":" << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (*explain_cmd) {
      std::cout << explain(doc);
      return 0;
    }
    opt.tasks = split(tasks);
    auto fmt = format == "machine" ? Format::machine : Format::human;
    auto report = *validate ? validate_document(doc, text, opt) : run(doc, text, opt);
    std::cout << emit(report, fmt);
    return report.engine_fault ? 2 : 0;
  } catch (const intcat::EngineFault& e) {
    std::cerr << "engine fault: " << e.what() << "\n";
    return 2;
  }
}
