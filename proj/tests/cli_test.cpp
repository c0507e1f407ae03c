#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string temp_file(const char* name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p.string();
}

int run(const std::string& args, const std::string& out_file = "/dev/null") {
  std::string cmd =
      std::string(STAR_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

// drop the wall-time line so two reports of the same run compare equal
std::string strip_timing(const std::string& report) {
  std::istringstream is(report);
  std::ostringstream os;
  std::string line;
  while (std::getline(is, line))
    if (line.find("wall_time_ms") == std::string::npos) os << line << "\n";
  return os.str();
}

const char* kTriangle = R"({"p": {"elementary": 1}, "U": {"rows":
  [[1,0],[-0.5,0.8660254037844386],[-0.5,-0.8660254037844386]]}})";
const char* kSquare =
    R"({"p": {"elementary": 1}, "U": {"rows": [[1,0],[0,1],[-1,0],[0,-1]]}})";
const char* kPaired3 = R"({"p": {"elementary": 1}, "U": {"rows":
  [[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]]}})";
const char* kPhantom =
    R"({"kind": "gaussian_bump", "centers": [[0,0]], "width": 0.18})";

}  // namespace

TEST_CASE("injectivity exit codes") {
  std::string tri = temp_file("cli_tri.json", kTriangle);
  std::string sq = temp_file("cli_sq.json", kSquare);
  std::string paired = temp_file("cli_paired.json", kPaired3);
  std::string bad = temp_file("cli_bad.json", "{not json");

  CHECK(run("injective " + tri) == 0);
  CHECK(run("injective " + sq) == 1);
  CHECK(run("injective " + paired) == 1);
  CHECK(run("injective " + bad) == 2);
  CHECK(run("dual " + bad) == 2);
}

TEST_CASE("dual command reports the triangle symbol") {
  std::string tri = temp_file("cli_tri.json", kTriangle);
  std::string out = (fs::temp_directory_path() / "cli_dual.txt").string();
  CHECK(run("dual " + tri, out) == 0);
  std::string text = slurp(out);
  CHECK(text.find("elliptic") != std::string::npos);
  CHECK(text.find("-0.75") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("symmetry command counts and capacity") {
  std::string sq = temp_file("cli_sq.json", kSquare);
  std::string out = (fs::temp_directory_path() / "cli_sym.txt").string();
  CHECK(run("symmetry " + sq, out) == 0);
  CHECK(slurp(out).find("8 symmetries") != std::string::npos);

  std::ostringstream big;
  big << R"({"p": {"elementary": 1}, "U": {"rows": [)";
  for (int i = 0; i < 25; ++i)
    big << (i ? "," : "") << "[" << i + 1 << "," << i + 2 << "]";
  big << "]}}";
  std::string bigf = temp_file("cli_big.json", big.str());
  CHECK(run("symmetry " + bigf) == 3);
  std::remove(out.c_str());
}

TEST_CASE("shapes and fano commands") {
  std::string out = (fs::temp_directory_path() / "cli_misc.txt").string();
  CHECK(run("--format json shapes polygon --m 5", out) == 0);
  CHECK(slurp(out).find("\"m\": 5") != std::string::npos);
  CHECK(run("fano matchings --n 2", out) == 0);
  CHECK(slurp(out).find("\"count\": 3") != std::string::npos);
  CHECK(run("fano cayley", out) == 0);
  CHECK(slurp(out).find("\"count\": 9") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("fixed-seed chart reports are byte-identical") {
  std::string a = (fs::temp_directory_path() / "cli_rep_a.json").string();
  std::string b = (fs::temp_directory_path() / "cli_rep_b.json").string();
  std::string cmd =
      "--format json --seed 17 fano chart --m 4 --n 2 --solve --starts 100";
  CHECK(run(cmd, a) == 0);
  CHECK(run(cmd, b) == 0);
  std::string ra = strip_timing(slurp(a)), rb = strip_timing(slurp(b));
  CHECK(ra == rb);
  CHECK(ra.find("clusters") != std::string::npos);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("simulation pipeline end to end") {
  std::string tri = temp_file("cli_tri.json", kTriangle);
  std::string sq = temp_file("cli_sq.json", kSquare);
  std::string ph = temp_file("cli_phantom.json", kPhantom);
  fs::path dir = fs::temp_directory_path();
  std::string data = (dir / "cli_fwd.sfld").string();
  std::string rec = (dir / "cli_rec.sfld").string();
  std::string out = (dir / "cli_sim.txt").string();

  CHECK(run("sim forward --star " + tri + " --phantom " + ph +
                " --n 64 --out " + data,
            out) == 0);
  CHECK(fs::file_size(data) == 16 + 64 * 64 * 8);

  CHECK(run("sim invert --star " + tri + " --phantom " + ph +
                " --n 64 --in " + data + " --out " + rec,
            out) == 0);
  CHECK(slurp(out).find("rel L2 error") != std::string::npos);

  CHECK(run("sim nullcheck --star " + sq + " --phantom " + ph +
                " --n 64 --reference " + tri,
            out) == 0);
  CHECK(slurp(out).find("ratio") != std::string::npos);

  for (const auto& f : {data, rec, out}) std::remove(f.c_str());
}
