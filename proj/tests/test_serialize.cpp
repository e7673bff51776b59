#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fibnum/errors.hpp"
#include "fibnum/recognizers.hpp"
#include "fibnum/serialize.hpp"
#include "fibnum/verify.hpp"

using namespace fibnum;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_error_line(const std::string& text) {
  try {
    from_native(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(Native, CgvalText) {
  auto text = to_native(build_cgval());
  EXPECT_EQ(text.substr(0, text.find('\n')), "tracks: {0,1,2}");
  EXPECT_NE(text.find("dead: "), std::string::npos);
  EXPECT_EQ(from_native(text), build_cgval());
}

TEST(Native, CgvalMatchesGolden) {
  EXPECT_EQ(to_native(build_cgval()), read_file(default_golden_dir() + "/cgval.native"));
}

TEST(Native, MissingTransitionsGoToFreshSink) {
  auto a = from_native(
      "# ones then nothing\n"
      "tracks: {0,1}\n"
      "states: 1\n"
      "initial: 0\n"
      "accepting: 0\n"
      "0 [1] -> 0\n");
  EXPECT_EQ(a.state_count(), 2u);
  EXPECT_TRUE(a.accepts(parse_word("111")));
  EXPECT_FALSE(a.accepts(parse_word("10")));
}

TEST(Native, ErrorsCarryLineNumbers) {
  const std::string head = "tracks: {0,1}\nstates: 2\ninitial: 0\naccepting: 1\n";
  EXPECT_EQ(parse_error_line(head + "0 [2] -> 1\n"), 5);
  EXPECT_EQ(parse_error_line(head + "0 [1] -> 1\n0 [1] -> 0\n"), 6);
  EXPECT_EQ(parse_error_line(head + "0 [1] -> 7\n"), 5);
  EXPECT_EQ(parse_error_line(head + "0 [1,0] -> 1\n"), 5);
  EXPECT_EQ(parse_error_line(head + "colour: red\n"), 5);
  EXPECT_GT(parse_error_line("tracks: {0,1}\nstates: 2\n"), 0);
  try {
    from_native(head + "0 [2] -> 1\n");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("outside alphabet {0,1}"), std::string::npos) << e.what();
  }
}

TEST(Dot, SkipsDeadState) {
  auto dot = to_dot(build_cgval(), "cgval");
  EXPECT_EQ(dot.rfind("digraph \"cgval\" {", 0), 0u);
  EXPECT_NE(dot.find("__start -> 0;"), std::string::npos);
  EXPECT_NE(dot.find("0 -> 2 [label=\"[2]\"];"), std::string::npos);
  EXPECT_EQ(dot.find(" 3 "), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
  EXPECT_EQ(export_automaton(build_cgval(), Format::dot, "cgval"), dot);
}
