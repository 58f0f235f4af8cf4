#include "ohtsuki/corpus.hpp"

#include <gtest/gtest.h>
#include "json.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ohtsuki;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kCorpus = std::string(OHTSUKI_DATA_DIR) + "/knots.txt";

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("ohtsuki-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// Runs the CLI with `args` (already shell-quoted); stderr is discarded.
Run cli(const std::string& args, const std::string& env = "OHTSUKI_CACHE_DIR=") {
  const std::string cmd = env + " '" + std::string(OHTSUKI_CLI_PATH) + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string last_line(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  const auto nl = t.rfind('\n');
  return nl == std::string::npos ? t : t.substr(nl + 1);
}

std::string without_header(const std::string& s) {
  std::istringstream in(s);
  std::string line, out;
  while (std::getline(in, line))
    if (line.rfind("# ", 0) != 0) out += line + "\n";
  return out;
}

int corrupted_line(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_corpus(in);
  } catch (const CorpusError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Corpus, BundledFileLoads) {
  const auto c = load_corpus(kCorpus);
  int knots = 0, framed = 0;
  for (const auto& e : c) {
    const LinkDiagram d = e.diagram();
    if (d.is_knot() && !e.framed()) ++knots;
    if (e.framed()) {
      ++framed;
      EXPECT_EQ(static_cast<int>(e.framings.size()), d.component_count()) << e.name;
    }
  }
  EXPECT_GE(knots, 10);
  EXPECT_GE(framed, 4);
  EXPECT_EQ(find_entry(c, "trefoil+").expect("v3"), Rational(-36));
  EXPECT_FALSE(find_entry(c, "unknot").expect("lambda1"));
  EXPECT_THROW(find_entry(c, "no-such-knot"), ParseError);
}

TEST(Corpus, CommentsAndBlankLines) {
  std::istringstream in("# header\n\n  a | braid | 2:1,1,1 |   | c2=1  # trailing\nb|pd|X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n");
  const auto c = parse_corpus(in);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].name, "a");
  EXPECT_EQ(c[0].line, 3);
  EXPECT_EQ(c[0].expect("c2"), Rational(1));
  EXPECT_EQ(c[1].notation, "pd");
  EXPECT_EQ(c[1].line, 4);
}

TEST(Corpus, CorruptedLinesReportLineNumber) {
  const std::string ok = "a | braid | 2:1,1,1\n# comment\n";
  EXPECT_EQ(corrupted_line(ok + "b | braid | 2:1,x\n"), 3);
  EXPECT_EQ(corrupted_line(ok + "b | knot | 2:1\n"), 3);
  EXPECT_EQ(corrupted_line(ok + "only-one-field\n"), 3);
  EXPECT_EQ(corrupted_line(ok + "b | braid | 2:1,1,1 | 1,1\n"), 3);
  EXPECT_EQ(corrupted_line(ok + "b | braid | 2:1,1,1 | z\n"), 3);
  EXPECT_EQ(corrupted_line(ok + "b | braid | 2:1,1,1 | | c2\n"), 3);
  EXPECT_EQ(corrupted_line(ok + "b | braid | 2:1,1,1 | | c2=q\n"), 3);
  EXPECT_EQ(corrupted_line(ok + "a | braid | 2:1,1,1\n"), 3);
  EXPECT_EQ(corrupted_line(ok + "\n\nb | pd | X(1,2\n"), 5);
  EXPECT_EQ(corrupted_line(ok), 0);
}

TEST(Corpus, MissingFile) {
  EXPECT_THROW(load_corpus((scratch_dir() / "absent.txt").string()), CorpusError);
}

TEST(Cli, Jones) {
  auto r = cli("jones 'braid:1:'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "1");
  EXPECT_EQ(r.out.rfind("# command: ", 0), 0u);
  r = cli("jones 'braid:2:1,1,1'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "t + t^3 - t^4");
  r = cli("jones --entry trefoil-pd");
  EXPECT_EQ(last_line(r.out), "t + t^3 - t^4");
}

TEST(Cli, LambdaText) {
  const auto r = cli("lambda --entry unknot --n 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lambda1 = 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("lambda2 = 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("congruence: pass"), std::string::npos);
}

TEST(Cli, LambdaJson) {
  auto r = cli("lambda --entry figure8 --n 1 --format json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["kind"], "lambda");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["result"]["lambda1"], "-6");
  EXPECT_EQ(j["result"]["lambda2"], "69");
  EXPECT_EQ(j["config"]["format"], "json");
  EXPECT_EQ(json::parse(j.dump()), j);

  r = cli("lambda --entry poincare --max-order 3 --format json");
  ASSERT_EQ(r.code, 0);
  const json p = json::parse(r.out);
  EXPECT_EQ(p["result"]["lambda1"], "6");
  EXPECT_EQ(p["result"]["lambda2"], "39");
  EXPECT_EQ(p["result"]["lambda3"], "380");
}

TEST(Cli, GlobalOptionsAfterSubcommand) {
  const auto a = cli("--format json lambda --entry trefoil+ --n 1");
  const auto b = cli("lambda --entry trefoil+ --n 1 --format json");
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(json::parse(a.out)["result"], json::parse(b.out)["result"]);
  EXPECT_EQ(json::parse(a.out)["result"]["lambda2"], "63");
}

TEST(Cli, FermatChecks) {
  auto r = cli("fermat gauss --l 1 --primes 5,7,11 --order 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "all checks pass");
  r = cli("fermat tau --entry trefoil- --framing +1 --prime 5");
  EXPECT_EQ(r.code, 0);
  r = cli("fermat fixtures --max-prime 31 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["pass"], true);
}

TEST(Cli, Sweep) {
  const auto r = cli("sweep --format json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["result"]["violations"], 0);
  EXPECT_GE(j["result"]["records"].size(), 40u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("jones 'X(1,2,3'").code, 2);
  EXPECT_EQ(cli("jones 'braid:2:1,q'").code, 2);
  EXPECT_EQ(cli("lambda --entry trefoil+ --framings 2").code, 2);
  EXPECT_EQ(cli("no-such-command").code, 2);
  EXPECT_EQ(cli("--corpus '" + (scratch_dir() / "absent.txt").string() + "' lambda --entry unknot --n 1").code, 4);
}

TEST(Cli, CorruptedCorpusExitsWithLineNumber) {
  const fs::path bad = scratch_dir() / "corrupt.txt";
  {
    std::ofstream out(bad);
    out << "# test corpus\nunknot | braid | 1:\ntrefoil | braid | 2:1,x,1\n";
  }
  const std::string cmd = "OHTSUKI_CACHE_DIR= '" + std::string(OHTSUKI_CLI_PATH) + "' --corpus '" + bad.string() +
                          "' lambda --entry unknot --n 1 2>&1";
  FILE* p = ::popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::string err;
  std::array<char, 1024> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) err.append(buf.data(), got);
  const int status = ::pclose(p);
  EXPECT_EQ(WEXITSTATUS(status), 4);
  EXPECT_NE(err.find("line 3"), std::string::npos) << err;
}

TEST(Cli, CacheDoesNotChangeResults) {
  const fs::path dir = scratch_dir() / "cache";
  fs::create_directories(dir);
  const std::string args = "lambda --entry borromean --framings 1,-1,1 --max-order 2";
  const auto plain = cli(args);
  const auto first = cli(args, "OHTSUKI_CACHE_DIR='" + dir.string() + "'");
  const auto second = cli(args, "OHTSUKI_CACHE_DIR='" + dir.string() + "'");
  ASSERT_EQ(plain.code, 0);
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(second.code, 0);
  EXPECT_TRUE(fs::exists(dir / "ohtsuki-cache.tsv"));
  EXPECT_GT(fs::file_size(dir / "ohtsuki-cache.tsv"), 0u);
  EXPECT_EQ(without_header(plain.out), without_header(first.out));
  EXPECT_EQ(without_header(plain.out), without_header(second.out));

  const fs::path file = scratch_dir() / "explicit-cache.tsv";
  const auto opt = cli("--cache '" + file.string() + "' " + args);
  EXPECT_EQ(opt.code, 0);
  EXPECT_EQ(without_header(plain.out), without_header(opt.out));
  EXPECT_TRUE(fs::exists(file));
}
