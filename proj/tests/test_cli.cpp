#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string("\"") + EULER_CLI + "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path temp_file(const std::string& name, const std::string& content) {
  auto dir = fs::temp_directory_path() / "euler_cli_test";
  fs::create_directories(dir);
  auto p = dir / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check 'Some A are B; All B are C |= Some A are C'").code, 0);
  auto ex4 = run("check --json 'Some A are B; All B are C |= All A are C'");
  EXPECT_EQ(ex4.code, 1);
  EXPECT_NE(ex4.out.find("\"counter_model\""), std::string::npos);
  auto ex6 = run("check --json 'No A are B; There is something C |= No A are C'");
  EXPECT_EQ(ex6.code, 1);
  EXPECT_NE(ex6.out.find("\"rule\": \"ipi\""), std::string::npos);
  EXPECT_EQ(run("check 'a is A; a is not A |= All B are C'").code, 2);
  EXPECT_EQ(run("check 'All A are A |= All A are B'").code, 3);
  EXPECT_EQ(run("check").code, 3);
}

TEST(Cli, CheckReadsFilesAndRenders) {
  auto f = temp_file("ex2.txt", "Some A are B\nAll B are C |= Some A are C\n");
  auto dir = fs::temp_directory_path() / "euler_cli_test" / "render";
  fs::remove_all(dir);
  EXPECT_EQ(run("check --no-oracle --render " + dir.string() + " " + f.string()).code, 0);
  EXPECT_TRUE(fs::exists(dir / "premise_1.svg"));
  EXPECT_TRUE(fs::exists(dir / "premise_2.svg"));
  std::size_t svgs = 0;
  for (const auto& e : fs::directory_iterator(dir)) svgs += e.path().extension() == ".svg";
  EXPECT_GE(svgs, 6u);
}

TEST(Cli, Render) {
  auto one = temp_file("one.json", R"({"circles":["A"]})");
  auto out = fs::temp_directory_path() / "euler_cli_test" / "one.svg";
  fs::remove(out);
  EXPECT_EQ(run("render " + one.string() + " --out " + out.string()).code, 0);
  EXPECT_TRUE(fs::exists(out));

  auto s1s2 = temp_file("s1s2.json", R"({"circles":["A","B","C"],"existentials":["x"],
    "relations":[["in","x","A"],["in","x","B"],["in","x","C"],["cr","A","B"],["cr","A","C"],["in","B","C"]]})");
  auto svg = run("render " + s1s2.string());
  EXPECT_EQ(svg.code, 0);
  std::size_t ellipses = 0;
  for (auto at = svg.out.find("<ellipse"); at != std::string::npos; at = svg.out.find("<ellipse", at + 1)) ++ellipses;
  EXPECT_EQ(ellipses, 3u);
  EXPECT_EQ(run("render " + s1s2.string() + " --seed 4").out, run("render " + s1s2.string() + " --seed 4").out);
  setenv("EULER_SEED", "4", 1);
  auto from_env = run("render " + s1s2.string()).out;
  unsetenv("EULER_SEED");
  EXPECT_EQ(from_env, run("render " + s1s2.string() + " --seed 4").out);

  EXPECT_EQ(run("render " + temp_file("bad.json", "{not json").string()).code, 3);
  EXPECT_EQ(run("render " + temp_file("bad2.json", R"({"circles":["A","B"]})").string()).code, 3);
  EXPECT_EQ(run("render /nonexistent/file.json").code, 3);
}

TEST(Cli, Export) {
  EXPECT_EQ(run("export 'All B are C'").out, "forall x. (B(x) -> C(x))\n");
  auto tptp = run("export --dialect tptp 'All B are C'").out;
  EXPECT_NE(tptp.find("fof(import_b, axiom, ? [X] : b(X))."), std::string::npos);
  auto empty = run("export ''");
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "");
  EXPECT_EQ(run("export '[]'").out, "");
  EXPECT_EQ(run("export --dialect xml 'All B are C'").code, 3);
}

TEST(Cli, Corpus) {
  EXPECT_EQ(run("corpus --count 0").out, "");
  auto a = run("corpus --circles 3 --seed 7 --count 100");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run("corpus --circles 3 --seed 7 --count 100").out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 100);
  EXPECT_EQ(run("corpus --circles 5").code, 3);
}
