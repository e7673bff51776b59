// fibnum: Zeckendorf / Chung-Graham conversions, adders, automata and checks.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibnum/commands.hpp"

int main(int argc, char** argv) {
  using namespace fibnum;
  CLI::App app{"Zeckendorf and Chung-Graham numeration toolkit"};
  app.require_subcommand(1);
  bool msd = false;
  app.add_flag("--msd", msd, "Read and print digit strings most-significant digit first");

  std::string from, to, value;
  auto* convert = app.add_subcommand("convert", "Convert a number between representations");
  convert->add_option("--from", from, "dec | zeck | cg | raw2")->required();
  convert->add_option("--to", to, "dec | zeck | cg")->required();
  convert->add_option("value", value, "Number or digit string")->required()->allow_extra_args(false);

  std::string system, x, y;
  auto* add = app.add_subcommand("add", "Add two representations with the synthesized adder");
  add->add_option("system", system, "zeck | cg")->required();
  add->add_option("x", x)->required();
  add->add_option("y", y)->required();

  std::string name, out_path, format = "native";
  auto* synth = app.add_subcommand("synth", "Synthesize a named automaton");
  synth->add_option("name", name, "Automaton name")->required();
  synth->add_option("-o,--out", out_path, "Output file (default: stdout)");
  synth->add_option("--format", format, "native | dot")->check(CLI::IsMember({"native", "dot"}));

  VerifyScale scale;
  auto* verify = app.add_subcommand("verify", "Re-check every claim and print a report");
  verify->add_option("--max-n", scale.max_n, "Upper end of the oracle sweeps");
  verify->add_option("--seed", scale.seed, "Seed for sampled sweeps");
  verify->add_option("--golden-dir", scale.golden_dir, "Directory of golden .native files");

  std::string automaton_path;
  auto* accepts = app.add_subcommand("accepts", "Run words through an automaton file; bracketed tuples for multi-track words");
  accepts->add_option("automaton", automaton_path, "Native automaton file")->required();
  // Words are taken verbatim: CLI11 would split "[2,2][0,0]" as a list.
  accepts->allow_extras();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CommandResult r;
  if (*convert) {
    r = cmd_convert(from, to, value, msd);
  } else if (*add) {
    r = cmd_add(system, x, y, msd);
  } else if (*synth) {
    r = cmd_synth(name, out_path, format == "dot" ? Format::dot : Format::native);
  } else if (*verify) {
    r = cmd_verify(scale);
  } else if (*accepts) {
    std::vector<std::string> words = accepts->remaining();
    r = cmd_accepts(automaton_path, words, msd);
  }
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
