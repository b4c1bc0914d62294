#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string bin() {
  const char* path = std::getenv("TAUKIT_BIN");
  REQUIRE_MESSAGE(path != nullptr, "TAUKIT_BIN must point at the cli binary");
  return path;
}

struct TempDir {
  TempDir() {
    std::string templ =
        (fs::temp_directory_path() / "taukit-cli-XXXXXX").string();
    REQUIRE(mkdtemp(templ.data()) != nullptr);
    path = templ;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const {
    return (fs::path(path) / name).string();
  }
  std::string path;
};

int run(const std::string& command) {
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

std::vector<std::string> data_rows(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("generate writes provenance, header, and cumulative timestamps") {
  TempDir dir;
  const std::string out = dir.file("events.csv");
  CHECK(run(bin() + " generate --kind periodic --period 5 --n 3 -o " + out +
            " 2>/dev/null") == 0);
  CHECK(slurp(out) ==
        "# generator kind=periodic period=5 n=3 seed=0\n"
        "user_id,timestamp\n"
        "synthetic,0\nsynthetic,5\nsynthetic,10\nsynthetic,15\n");

  const std::string alt = dir.file("alt.csv");
  CHECK(run(bin() + " generate --kind alternating --a 1 --b 9 --n 2 -o " +
            alt + " 2>/dev/null") == 0);
  CHECK(slurp(alt) ==
        "# generator kind=alternating a=1 b=9 n=2 seed=0\n"
        "user_id,timestamp\n"
        "synthetic,0\nsynthetic,1\nsynthetic,10\n");
}

TEST_CASE("generate is reproducible and seed-sensitive") {
  TempDir dir;
  const std::string flags = " generate --kind powerlaw --alpha 1.6 --n 200"
                            " --seed 9 -o ";
  CHECK(run(bin() + flags + dir.file("a.csv") + " 2>/dev/null") == 0);
  CHECK(run(bin() + flags + dir.file("b.csv") + " 2>/dev/null") == 0);
  CHECK(slurp(dir.file("a.csv")) == slurp(dir.file("b.csv")));

  CHECK(run(bin() + " generate --kind powerlaw --alpha 1.6 --n 200 --seed 10"
                    " -o " + dir.file("c.csv") + " 2>/dev/null") == 0);
  CHECK(slurp(dir.file("c.csv")) != slurp(dir.file("a.csv")));
}

TEST_CASE("generate reports expected metrics on standard error") {
  TempDir dir;
  CHECK(run(bin() + " generate --kind poisson --rate 2 --n 100 -o " +
            dir.file("p.csv") + " 2>" + dir.file("err.txt")) == 0);
  const std::string err = slurp(dir.file("err.txt"));
  CHECK(err.find("# expected:") != std::string::npos);
  CHECK(err.find("B 0 +/-") != std::string::npos);
}

TEST_CASE("analyze produces rows and a skipped section") {
  TempDir dir;
  const std::string input = dir.file("events.csv");
  spit(input,
       "user_id,timestamp\n"
       "u1,0\nu1,3600\nu1,10800\nu1,14400\n"
       "solo,42\n");
  const std::string out = dir.file("report.tsv");
  CHECK(run(bin() + " analyze " + input + " -o " + out + " 2>/dev/null") == 0);
  const std::string report = slurp(out);
  CHECK(report.find("# skipped\tsolo\tinsufficient-events\n") !=
        std::string::npos);
  const auto rows = data_rows(report);
  REQUIRE(rows.size() == 2);  // header row + u1
  CHECK(rows[1].rfind("u1\t4\t", 0) == 0);
}

TEST_CASE("generate pipes straight into analyze") {
  TempDir dir;
  const std::string out = dir.file("piped.tsv");
  CHECK(run(bin() + " generate --kind powerlaw --alpha 1.5 --xmin 3600"
                    " --n 20000 --seed 4 2>/dev/null | " +
            bin() + " analyze -o " + out + " 2>/dev/null") == 0);
  const auto rows = data_rows(slurp(out));
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].rfind("synthetic\t20001\t", 0) == 0);

  // The alpha cell sits inside the generator's tolerance band.
  std::istringstream cells(rows[1]);
  std::string cell;
  for (int i = 0; i < 5; ++i) std::getline(cells, cell, '\t');
  const double alpha = std::strtod(cell.c_str(), nullptr);
  CHECK(alpha > 1.4);
  CHECK(alpha < 1.6);
}

TEST_CASE("ccdf exports the survival curve and a model sibling") {
  TempDir dir;
  const std::string input = dir.file("events.csv");
  spit(input, "user_id,timestamp\nu,0\nu,1\nu,3\nu,5\nu,9\n");
  const std::string out = dir.file("curve.tsv");
  CHECK(run(bin() + " ccdf " + input + " --user u -o " + out +
            " 2>/dev/null") == 0);
  CHECK(slurp(out) == "1\t1\n2\t0.75\n4\t0.25\n");

  CHECK(run(bin() + " ccdf " + input + " --user u --fit -o " + out +
            " 2>/dev/null") == 0);
  const std::string model = slurp(dir.file("curve.model.tsv"));
  CHECK(model.rfind("1\t1\n", 0) == 0);
  CHECK(data_rows(model).size() == 3);
}

TEST_CASE("ccdf without an output path refuses --fit") {
  TempDir dir;
  const std::string input = dir.file("events.csv");
  spit(input, "user_id,timestamp\nu,0\nu,5\n");
  CHECK(run(bin() + " ccdf " + input + " --user u --fit >/dev/null"
                    " 2>/dev/null") == 1);
}

TEST_CASE("unknown users and unreadable files exit 2") {
  TempDir dir;
  const std::string input = dir.file("events.csv");
  spit(input, "user_id,timestamp\nu,0\nu,5\n");
  CHECK(run(bin() + " ccdf " + input + " --user ghost >/dev/null 2>" +
            dir.file("err.txt")) == 2);
  CHECK(slurp(dir.file("err.txt")).find("unknown user: ghost") !=
        std::string::npos);

  CHECK(run(bin() + " analyze " + dir.file("missing.csv") +
            " >/dev/null 2>/dev/null") == 2);
  CHECK(run(bin() + " sweep " + input + " --user ghost >/dev/null"
                    " 2>/dev/null") == 2);
}

TEST_CASE("strict mode fails fast, lenient mode records skips") {
  TempDir dir;
  const std::string input = dir.file("events.csv");
  spit(input, "user_id,timestamp\nu,0\nu,garbage\nu,50\nu,90\n");
  CHECK(run(bin() + " analyze --strict " + input + " >/dev/null 2>" +
            dir.file("err.txt")) == 2);
  CHECK(slurp(dir.file("err.txt")).find("invalid timestamp") !=
        std::string::npos);

  const std::string out = dir.file("report.tsv");
  CHECK(run(bin() + " analyze " + input + " -o " + out + " 2>/dev/null") == 0);
  CHECK(slurp(out).find("# skipped-lines: 1\n") != std::string::npos);
}

TEST_CASE("usage problems exit 1") {
  CHECK(run(bin() + " analyze --nope >/dev/null 2>/dev/null") == 1);
  CHECK(run(bin() + " ccdf >/dev/null 2>/dev/null") == 1);  // --user missing
  CHECK(run(bin() + " sweep --windows 2h,1h /dev/null >/dev/null"
                    " 2>/dev/null") == 1);
  CHECK(run(bin() + " generate --kind banana >/dev/null 2>/dev/null") == 1);
  CHECK(run(bin() + " generate --kind powerlaw --alpha 0.5 >/dev/null"
                    " 2>/dev/null") == 1);
  CHECK(run(bin() + " analyze --threads 0x /dev/null >/dev/null"
                    " 2>/dev/null") == 1);
  CHECK(run(bin() + " >/dev/null 2>/dev/null") == 1);  // subcommand required
}

TEST_CASE("help and version exit 0") {
  TempDir dir;
  CHECK(run(bin() + " --help >" + dir.file("help.txt") + " 2>/dev/null") == 0);
  CHECK(slurp(dir.file("help.txt")).find("analyze") != std::string::npos);
  CHECK(run(bin() + " --version >" + dir.file("ver.txt") + " 2>/dev/null") ==
        0);
  CHECK(slurp(dir.file("ver.txt")).find("0.1.0") != std::string::npos);
}

TEST_CASE("sweep honors custom windows and user selection") {
  TempDir dir;
  const std::string input = dir.file("events.csv");
  spit(input,
       "user_id,timestamp\n"
       "u1,0\nu1,30\nu1,90\nu1,200\n"
       "u2,0\nu2,45\nu2,100\n");
  const std::string out = dir.file("sweep.tsv");
  CHECK(run(bin() + " sweep " + input + " --windows 1m,2m --user u1 -o " +
            out + " 2>/dev/null") == 0);
  const std::string text = slurp(out);
  CHECK(text.find("# windows: 60 120\n") != std::string::npos);
  const auto rows = data_rows(text);
  REQUIRE(rows.size() == 3);  // header + u1 x 2 windows
  CHECK(rows[1].rfind("u1\t60\t", 0) == 0);
  CHECK(rows[2].rfind("u1\t120\t", 0) == 0);
}

TEST_CASE("jsonl input and epsilon dedup flow through to the header") {
  TempDir dir;
  const std::string input = dir.file("events.jsonl");
  spit(input,
       "{\"user\":\"w\",\"ts\":0}\n"
       "{\"user\":\"w\",\"ts\":0}\n"
       "{\"user\":\"w\",\"ts\":600}\n"
       "{\"user\":\"w\",\"ts\":1800}\n");
  const std::string out = dir.file("report.tsv");
  CHECK(run(bin() + " analyze --format jsonl --dedup epsilon " + input +
            " -o " + out + " 2>/dev/null") == 0);
  const std::string text = slurp(out);
  CHECK(text.find("# dedup: keep-with-epsilon\n") != std::string::npos);
  const auto rows = data_rows(text);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].rfind("w\t4\t", 0) == 0);  // all four events kept
}

TEST_CASE("zone-less timestamps warn once per input") {
  TempDir dir;
  const std::string input = dir.file("events.csv");
  spit(input,
       "user_id,timestamp\n"
       "u,2024-01-01T00:00:00\n"
       "u,2024-01-01T01:00:00\n");
  CHECK(run(bin() + " analyze " + input + " >/dev/null 2>" +
            dir.file("err.txt")) == 0);
  const std::string err = slurp(dir.file("err.txt"));
  CHECK(err.find("treated as UTC") != std::string::npos);
  CHECK(err.find("2 timestamp(s)") != std::string::npos);
}

}  // TEST_SUITE
