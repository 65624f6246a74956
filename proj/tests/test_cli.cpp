#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pebbling/cli.hpp"
#include "pebbling/error.hpp"
#include "pebbling/io.hpp"

using namespace pebbling;

namespace {

const char* kPath3 =
    "vertices a b c\n"
    "edge a b\n"
    "edge b c\n"
    "config a 7\n"
    "demand_kind unit\n";

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("pebbling_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto file = path_ / name;
    std::ofstream(file) << text;
    return file.string();
  }

 private:
  std::filesystem::path path_;
};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "pebble");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

InstanceFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

}  // namespace

TEST(InstanceFormatTest, ParsesDirectives) {
  InstanceFile f = parse(
      "# a path\n"
      "vertices a b c\n"
      "edge a b\n"
      "edge b c\n"
      "config a 7\n"
      "demand c 2\n"
      "target c\n");
  EXPECT_EQ(f.graph.size(), 3u);
  EXPECT_EQ(f.config, Configuration({7, 0, 0}));
  EXPECT_EQ(f.demand, Demand({0, 0, 2}));
  EXPECT_EQ(f.target, Vertex{2});
  EXPECT_FALSE(f.trivial);
}

TEST(InstanceFormatTest, NegativeCountsMakeExtendedConfigurations) {
  InstanceFile f = parse("vertices a b\nedge a b\nconfig a -1\nconfig b 5\n");
  EXPECT_TRUE(f.config.extended());
  EXPECT_EQ(f.config[0], -1);
}

TEST(InstanceFormatTest, CanonicalWriteIsStable) {
  InstanceFile f = parse(
      "vertices a b c\n"
      "edge b c\n"
      "edge b a\n"
      "config a 0\n"
      "config c 3\n"
      "demand_kind unit\n");
  const std::string once = write_instance(f);
  EXPECT_EQ(once,
            "vertices a b c\n"
            "edge a b\n"
            "edge b c\n"
            "config c 3\n"
            "demand_kind unit\n");
  EXPECT_EQ(parse(once), f);
  EXPECT_EQ(write_instance(parse(once)), once);
}

TEST(InstanceFormatTest, ReducedInstancesRoundTrip) {
  X4CInstance inst(2, {{0, 1, 2, 3}, {2, 3, 4, 5}, {4, 5, 6, 7}});
  for (const ReducedInstance& r : {reduce_to_cover_solvability(inst), reduce_to_number_threshold(inst)}) {
    InstanceFile f = to_instance_file(r);
    const std::string text = write_instance(f);
    EXPECT_EQ(parse(text), f);
    EXPECT_EQ(write_instance(parse(text)), text);
  }
}

TEST(InstanceFormatTest, ErrorsNameTheLine) {
  auto line_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("vertices a b\nedge a c\n"), 2u);
  EXPECT_EQ(line_of("vertices a b\nedge a b\nconfig a x\n"), 3u);
  EXPECT_EQ(line_of("edge a b\n"), 1u);
  EXPECT_EQ(line_of("vertices a b\nedge a b\nfrobnicate\n"), 3u);
  EXPECT_EQ(line_of("vertices a a\n"), 1u);
}

TEST(CertificateFormatTest, RoundTripAndErrors) {
  const Graph p3 = parse(kPath3).graph;
  std::istringstream in("a b 3\n# done\nb c 1\n");
  MoveList ml = parse_certificate(in, p3);
  EXPECT_EQ(ml.get(0, 1), 3);
  EXPECT_EQ(write_certificate(ml, p3), "a b 3\nb c 1\n");

  for (const char* bad : {"a c 1\n", "a b 0\n", "a b 1\na b 2\n", "a q 1\n"}) {
    std::istringstream b(bad);
    EXPECT_THROW(parse_certificate(b, p3), ParseError) << bad;
  }
}

TEST(X4CFormatTest, RoundTrip) {
  std::istringstream in("2 3\n1 2 3 4\n3 4 5 6\n5 6 7 8\n");
  X4CInstance inst = parse_x4c(in);
  EXPECT_EQ(inst.n(), 2u);
  EXPECT_EQ(inst.set(2), (X4CInstance::Set{4, 5, 6, 7}));
  EXPECT_EQ(write_x4c(inst), "2 3\n1 2 3 4\n3 4 5 6\n5 6 7 8\n");

  std::istringstream bad("1 1\n1 2 3 9\n");
  EXPECT_THROW(parse_x4c(bad), ParseError);
}

TEST(CliTest, SolveExitCodes) {
  TempDir dir;
  Outcome yes = run({"solve", "--instance", dir.write("yes.txt", kPath3)});
  EXPECT_EQ(yes.code, cli::kOk);
  EXPECT_NE(yes.out.find("solvable"), std::string::npos);

  std::string six = kPath3;
  six.replace(six.find("a 7"), 3, "a 6");
  Outcome no = run({"solve", "--instance", dir.write("no.txt", six)});
  EXPECT_EQ(no.code, cli::kNegative);
  EXPECT_NE(no.out.find("c"), std::string::npos);
}

TEST(CliTest, UsageErrors) {
  TempDir dir;
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"solve"}).code, cli::kUsage);
  EXPECT_EQ(run({"solve", "--instance", dir.write("bad.txt", "vertices a\nedge a b\n")}).code, cli::kUsage);
  EXPECT_EQ(run({"solve", "--instance", "/nonexistent/instance.txt"}).code, cli::kUsage);
}

TEST(CliTest, BudgetExitCode) {
  TempDir dir;
  const std::string path = dir.write("c6.txt",
                                     "vertices a b c d e f\n"
                                     "edge a b\nedge b c\nedge c d\nedge d e\nedge e f\nedge f a\n"
                                     "config a 9\nconfig d 9\ndemand_kind unit\n");
  EXPECT_EQ(run({"--node-cap", "2", "solve", "--instance", path}).code, cli::kBudget);
}

TEST(CliTest, VerifyAcceptsSolveCertificate) {
  TempDir dir;
  const std::string instance = dir.write("p3.txt", kPath3);
  Outcome solved = run({"solve", "--instance", instance});
  ASSERT_EQ(solved.code, cli::kOk);
  const std::string certificate = solved.out.substr(solved.out.find("certificate:\n") + 13);
  Outcome ok = run({"verify", "--instance", instance, "--certificate", dir.write("cert.txt", certificate)});
  EXPECT_EQ(ok.code, cli::kOk);

  Outcome short_run = run({"verify", "--instance", instance, "--certificate", dir.write("short.txt", "a b 3\n")});
  EXPECT_EQ(short_run.code, cli::kNegative);
  EXPECT_NE(short_run.out.find("c"), std::string::npos);
}

TEST(CliTest, JsonOutputIsOneDocument) {
  TempDir dir;
  const std::string instance = dir.write("p3.txt", kPath3);
  for (std::vector<std::string> args : {std::vector<std::string>{"solve"}, {"number"}, {"pi"}, {"oracle"},
                                        {"canonical"}, {"reach", "--target", "c"}, {"gamma", "--target", "c"}}) {
    args.insert(args.begin(), "--json");
    args.insert(args.end(), {"--instance", instance});
    Outcome r = run(args);
    EXPECT_NE(r.code, cli::kUsage) << args[1] << ": " << r.err;
    nlohmann::json doc;
    ASSERT_NO_THROW(doc = nlohmann::json::parse(r.out)) << args[1];
    EXPECT_EQ(doc["command"], args[1]);
  }
}

TEST(CliTest, NumbersAndGamma) {
  TempDir dir;
  const std::string instance = dir.write("p3.txt", kPath3);
  nlohmann::json number = nlohmann::json::parse(run({"--json", "number", "--instance", instance}).out);
  EXPECT_EQ(number["value"], 7);
  nlohmann::json serial = nlohmann::json::parse(run({"--json", "number", "--serial", "--instance", instance}).out);
  EXPECT_EQ(serial["value"], 7);
  nlohmann::json pi = nlohmann::json::parse(run({"--json", "pi", "--instance", instance}).out);
  EXPECT_EQ(pi["value"], 4);
  Outcome gamma = run({"gamma", "--target", "c", "--instance", instance});
  EXPECT_EQ(gamma.code, cli::kOk);
}

TEST(CliTest, ReduceIsDeterministicForASeed) {
  Outcome a = run({"reduce", "x4c-cover", "--seed", "5", "--n", "1", "--m", "3"});
  Outcome b = run({"reduce", "x4c-cover", "--seed", "5", "--n", "1", "--m", "3"});
  if (a.code == cli::kOk) {
    EXPECT_EQ(a.out, b.out);
    EXPECT_NO_THROW(parse(a.out));
  } else {
    // The random instance may leave an element uncovered.
    EXPECT_EQ(a.code, cli::kUsage);
  }

  TempDir dir;
  Outcome fig = run({"reduce", "x4c-number", "--x4c", dir.write("fig.x4c", "2 3\n1 2 3 4\n3 4 5 6\n5 6 7 8\n")});
  ASSERT_EQ(fig.code, cli::kOk);
  InstanceFile f = parse(fig.out);
  EXPECT_EQ(f.graph.size(), 21u);
  EXPECT_EQ(f.threshold, 77);
}
