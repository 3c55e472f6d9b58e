#include "cyclemod_cli/app.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;
using cyclemod::cli::run;

bool update_golden = false;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  std::string name;
  int code;
  std::vector<std::string> args;
};

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases{
      {"residue_t_2", 0, {"residue", "--field", "GF(5)(t)", "--place", "t", "--symbol", "{t,2}"}},
      {"residue_json", 0, {"residue", "--field", "GF(5)(t)", "--place", "t", "--symbol", "{2,t}", "--format", "json"}},
      {"symbol_literal", 0, {"symbol", "--symbol", "{t, t+1}@GF(3)(t):2", "--format", "json"}},
      {"norm_f9", 0, {"norm", "--symbol", "{a+1}@GF(9)", "--field", "GF(3)"}},
      {"diff_a1", 0, {"diff", "--scheme", "A1", "--field", "GF(3)", "--symbol", "{t/(t+1)}"}},
      {"diff_plane", 0, {"diff", "--scheme", "A2", "--field", "GF(3)", "--symbol", "{[x=0], [y=0]}", "--format", "json"}},
      {"diff_curve_point", 0, {"diff", "--scheme", "A2", "--field", "GF(3)", "--curve", "y=0", "--symbol", "{t}"}},
      {"diff_place", 0, {"diff", "--scheme", "P1", "--field", "GF(5)", "--place", "t^2+2", "--symbol", "{a}@GF(25)"}},
      {"cohomology_p1", 0,
       {"cohomology", "--scheme", "P1", "--field", "GF(3)", "--p", "1", "--n", "1", "--degree-bound", "2"}},
      {"cohomology_p1_json", 0,
       {"cohomology", "--scheme", "P1", "--field", "GF(3)", "--p", "1", "--n", "1", "--degree-bound", "2", "--format",
        "json"}},
      {"cohomology_spec", 0, {"cohomology", "--scheme", "SPEC", "--field", "GF(5)", "--p", "0", "--n", "1"}},
      {"trace_t2", 0, {"trace", "--map", "t->t^2", "--scheme", "P1", "--field", "GF(3)"}},
      {"trace_json", 0, {"trace", "--map", "t->(t^3+1)/t", "--scheme", "P1", "--field", "GF(5)", "--format", "json"}},
      {"axioms_milnor", 0, {"axioms", "--instance", "milnor", "--trials", "20", "--seed", "42", "--format", "json"}},
      {"axioms_mutant", 1,
       {"axioms", "--instance", "mutant:r3e-sign", "--relation", "R3e", "--trials", "200", "--seed", "7"}},
      {"reciprocity", 0, {"reciprocity", "--trials", "40", "--format", "json"}},
  };
  return cases;
}

fs::path golden_dir() { return fs::path(CYCLEMOD_GOLDEN_DIR); }

}  // namespace

TEST(CliGolden, MatchesFiles) {
  for (const auto& c : golden_cases()) {
    const Outcome o = invoke(c.args);
    EXPECT_EQ(o.code, c.code) << c.name << ": " << o.err;
    const fs::path file = golden_dir() / (c.name + ".out");
    if (update_golden) {
      std::ofstream(file, std::ios::binary) << o.out;
      continue;
    }
    ASSERT_TRUE(fs::exists(file)) << file;
    EXPECT_EQ(o.out, slurp(file)) << c.name;
  }
}

TEST(CliGolden, SpotValues) {
  EXPECT_EQ(invoke({"residue", "--field", "GF(5)(t)", "--place", "t", "--symbol", "{t,2}"}).out, "{2}\n");
  const Outcome coh =
      invoke({"cohomology", "--scheme", "P1", "--field", "GF(3)", "--p", "1", "--n", "1", "--degree-bound", "2"});
  EXPECT_EQ(coh.out.substr(0, 2), "Z\n");
  const Outcome tr = invoke({"trace", "--map", "t->t^2", "--scheme", "P1", "--field", "GF(3)"});
  EXPECT_EQ(tr.code, 0);
  EXPECT_EQ(tr.out.substr(0, 2), "2\n");
}

TEST(Cli, ByteIdenticalReruns) {
  const std::vector<std::string> args{"axioms", "--trials", "30", "--format", "json"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  const std::vector<std::string> rec{"reciprocity", "--trials", "30", "--seed", "9", "--format", "json"};
  EXPECT_EQ(invoke(rec).out, invoke(rec).out);
  EXPECT_NE(invoke(rec).out, invoke({"reciprocity", "--trials", "30", "--seed", "10", "--format", "json"}).out);
}

TEST(Cli, WitnessReplays) {
  const Outcome o = invoke({"axioms", "--instance", "mutant:d4-slot", "--relation", "R3d", "--trials", "200", "--format",
                            "json"});
  ASSERT_EQ(o.code, 1);
  const auto j = nlohmann::json::parse(o.out);
  const auto& failure = j["reports"][0]["failures"][0];
  const std::string seed = std::to_string(failure["trial_seed"].get<std::uint64_t>());
  const Outcome replay = invoke({"axioms", "--instance", "mutant:d4-slot", "--relation", "R3d", "--replay-seed", seed,
                                 "--format", "json"});
  EXPECT_EQ(replay.code, 1);
  const auto r = nlohmann::json::parse(replay.out);
  EXPECT_EQ(r["outcome"]["witness"], failure["witness"]);
  EXPECT_EQ(r["outcome"]["lhs"], failure["lhs"]);
  EXPECT_EQ(r["outcome"]["rhs"], failure["rhs"]);
  EXPECT_EQ(invoke({"axioms", "--relation", "R3d", "--replay-seed", seed}).code, 0);
}

TEST(Cli, InputErrorsExitTwo) {
  const std::vector<std::vector<std::string>> bad{
      {},
      {"frobnicate"},
      {"symbol", "--symbol", "{t, 0}@GF(3)(t)"},
      {"symbol", "--symbol", "{t, t+1}@GF(3)(t):3"},
      {"symbol", "--symbol", "{t}@GF(6)(t)"},
      {"residue", "--field", "GF(5)(t)", "--place", "t^2", "--symbol", "{t}"},
      {"cohomology", "--scheme", "Q7", "--field", "GF(3)", "--p", "1", "--n", "1"},
      {"cohomology", "--scheme", "A2", "--field", "GF(3)", "--p", "1", "--n", "1"},
      {"cohomology", "--scheme", "P1", "--p", "1", "--n", "1"},
      {"trace", "--map", "t->", "--scheme", "P1", "--field", "GF(3)"},
      {"axioms", "--relation", "R9"},
      {"axioms", "--format", "yaml"},
      {"norm", "--symbol", "{a}@GF(9)", "--field", "GF(5)"},
  };
  for (const auto& args : bad) {
    const Outcome o = invoke(args);
    EXPECT_EQ(o.code, 2) << (args.empty() ? "" : args[0]) << " " << o.out;
    EXPECT_FALSE(o.err.empty());
  }
  const Outcome pos = invoke({"symbol", "--symbol", "{t, t+}@GF(3)(t)"});
  EXPECT_NE(pos.err.find("position"), std::string::npos) << pos.err;
}

TEST(Cli, OutFile) {
  const fs::path p = fs::temp_directory_path() / "cyclemod_cli_out.txt";
  fs::remove(p);
  const Outcome o = invoke({"residue", "--field", "GF(5)(t)", "--place", "t", "--symbol", "{t,2}", "--out", p.string()});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  EXPECT_EQ(slurp(p), "{2}\n");
  fs::remove(p);
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  for (int i = 1; i < argc; ++i) update_golden = update_golden || std::string(argv[i]) == "--update-golden";
  return RUN_ALL_TESTS();
}
