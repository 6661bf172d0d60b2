#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <set>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "milnor/config.hpp"
#include "milnor/paper_suite.hpp"
#include "milnor/report.hpp"

using namespace milnor;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run mzeta(const std::string& args) {
  Run r;
  const std::string cmd = std::string(MZETA_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string cfg(const std::string& name) { return std::string(MILNOR_DATA_DIR "/configs/") + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("mzeta_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

// "key: value" line of a text report.
std::string text_field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  return "<missing " + key + ">";
}

}  // namespace

TEST_CASE("config files parse") {
  auto job = read_job_file(cfg("example2.cfg"));
  CHECK(job.mode == Mode::almost_nd);
  CHECK(job.vars == std::vector<std::string>{"x", "y", "z"});
  REQUIRE(job.faces.size() == 1);
  CHECK(job.faces[0].weight == Weight{1, 1, 1});
  REQUIRE(job.faces[0].points.size() == 2);
  CHECK(job.faces[0].points[1].count == 2);
  CHECK(job.field == std::optional<std::string>("alpha^2 + alpha + 1"));

  auto shift = read_job_file(cfg("nodal_cubic_shift.cfg"));
  CHECK(shift.mode == Mode::shift);
  CHECK(shift.points.size() == 1);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_job("polynomial = x\n[face]\nweight = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_job("polynomial = x\ncolour = red\n"), ParseError);
  CHECK_THROWS_AS(parse_job("vars = x\n"), ParseError);
  CHECK_THROWS_AS(parse_job("polynomial = x\nmode = fast\n"), ParseError);
  CHECK_THROWS_AS(parse_job("polynomial = x\n[face]\nweight = 1, a\n[point]\nmu = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_job("polynomial = x\n[bogus]\n"), ParseError);
}

TEST_CASE("zeta reports for the example configs") {
  struct Case {
    const char* file;
    const char* total;
    long long mu;
  };
  for (const Case& c : {Case{"example1.cfg", "(1-t^2)^-1 * (1-t^3)^-1 * (1-t^6)^1", 2}, Case{"example2.cfg", "(1-t^4)^-3", 11},
                        Case{"sphere.cfg", "(1-t^2)^-1", 1},
                        Case{"sextic_f.cfg", "(1-t^6)^-9 * (1-t^7)^-6 * (1-t^14)^6 * (1-t^21)^6 * (1-t^42)^-6", 137},
                        Case{"sextic_g.cfg", "(1-t^6)^-9 * (1-t^7)^-6 * (1-t^14)^6 * (1-t^21)^6 * (1-t^42)^-6", 137},
                        Case{"nodal_cubic_shift.cfg", "(1-t^3)^-2 * (1-t^4)^-1", 9}}) {
    INFO(c.file);
    auto r = run_zeta(read_job_file(cfg(c.file)));
    CHECK(r.total == parse_zeta(c.total));
    CHECK(r.milnor == c.mu);
  }
}

TEST_CASE("text and JSON reports carry the same numbers") {
  for (const char* file : {"example1.cfg", "example2.cfg", "sextic_g.cfg", "nodal_cubic_shift.cfg"}) {
    INFO(file);
    auto r = run_zeta(read_job_file(cfg(file)));
    const std::string text = render_text(r);
    const nlohmann::json j = to_json(r);
    for (const char* key : {"input", "vars", "mode", "newton", "zeta", "milnor", "warnings"}) CHECK(j.contains(key));
    CHECK(parse_zeta(text_field(text, "zeta total")) == parse_zeta(j["zeta"]["total"].get<std::string>()));
    CHECK(parse_zeta(text_field(text, "zeta generic")) == parse_zeta(j["zeta"]["generic"].get<std::string>()));
    CHECK(parse_zeta(text_field(text, "zeta erratum")) == parse_zeta(j["zeta"]["erratum"].get<std::string>()));
    CHECK(text_field(text, "milnor") == std::to_string(j["milnor"].get<long long>()));
    CHECK(j["zeta"]["local"].size() == r.local.size());
    CHECK(j["warnings"].size() == r.warnings.size());
  }
}

TEST_CASE("reports are deterministic") {
  auto a = to_json(run_zeta(read_job_file(cfg("sextic_g.cfg")))).dump();
  auto b = to_json(run_zeta(read_job_file(cfg("sextic_g.cfg")))).dump();
  CHECK(a == b);
}

TEST_CASE("resolve reports") {
  JobConfig job;
  job.polynomial = "x^3+y^3+z^3-3*x*y*z+z^4";
  job.vars = {"x", "y", "z"};
  auto r = run_resolve(job);
  CHECK(r.fan.rays.size() == 4);
  CHECK(r.fan.cones.size() == 3);
  REQUIRE(r.exceptional.size() == 1);
  CHECK(r.exceptional[0].singular_points.size() == 3);

  job.polynomial = "w3^6*(w1^3+w2^2+w3)";
  job.vars = {"w1", "w2", "w3"};
  auto s = run_resolve(job);
  std::set<Weight> rays(s.fan.rays.begin(), s.fan.rays.end());
  for (const Weight& w : std::vector<Weight>{{2, 3, 6}, {1, 2, 3}, {1, 1, 2}, {1, 1, 1}}) CHECK(rays.count(w) == 1);

  job.polynomial = "x^2*y*z";
  job.vars = {"x", "y", "z"};
  auto m = run_resolve(job);
  CHECK(m.fan.cones.size() == 1);
  CHECK(m.exceptional.empty());
  CHECK(to_json(m)["fan"].is_object());
}

TEST_CASE("plumbing reports") {
  auto r = run_plumbing(MILNOR_DATA_DIR "/sextic_f.graph", "");
  CHECK(r.det == -6);
  CHECK(r.h1.to_string() == "Z^8 + Z/6");
  CHECK(r.h1 == r.h1_presentation);
  auto j = to_json(r);
  CHECK(j["h1"]["text"] == "Z^8 + Z/6");
  auto e8 = run_plumbing(MILNOR_DATA_DIR "/e8.graph", "");
  CHECK(e8.h1.to_string() == "0");
  auto one = run_plumbing(temp_file("one.graph", "node A 2 -1\n"), "");
  CHECK(one.h1.to_string() == "Z^4");
}

TEST_CASE("regression suite passes and catches a corrupted fixture") {
  auto fx = default_fixtures(MILNOR_DATA_DIR);
  for (const auto& c : verify_paper(fx)) {
    INFO(c.name << ": expected " << c.expected << ", got " << c.actual);
    CHECK(c.pass);
  }
  fx.f6 += " + x^6";
  bool flagged = false;
  for (const auto& c : verify_paper(fx))
    if (c.name == "torus sextic milnor") flagged = !c.pass;
  CHECK(flagged);
}

TEST_CASE("command line exit codes") {
  auto ok = mzeta("zeta --config " + cfg("example2.cfg"));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("milnor: 11") != std::string::npos);

  auto json = mzeta("zeta --poly 'x^2+y^2+z^2' --mode nondegenerate --format json");
  CHECK(json.code == 0);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["zeta"]["total"] == "(1-t^2)^-1");
  CHECK(j["milnor"] == 1);

  CHECK(mzeta("zeta --poly 'x^2+'").code == 1);
  CHECK(mzeta("zeta --poly 'x^2' --mode sideways").code == 1);
  CHECK(mzeta("zeta --poly '(x-y)^2+y^3' --mode nondegenerate").code == 2);
  CHECK(mzeta("plumbing " + temp_file("bad.graph", "refs h\nnode A 0 ? 2\nnoncompact A 1 1\n")).code == 2);

  const std::string unknown = temp_file(
      "unknown.cfg", "polynomial = x^3+y^3+z^3-3*alpha*x*y*z+z^4\nvars = x,y,z\nfield = alpha^2+alpha+1\nmode = nondegenerate\n");
  CHECK(mzeta("zeta --config " + unknown).code == 0);
  CHECK(mzeta("zeta --config " + unknown + " --strict").code == 3);
}

TEST_CASE("command line outputs") {
  const std::string fan = (std::filesystem::temp_directory_path() / "mzeta_test_fan.txt").string();
  auto r = mzeta("resolve --poly 'w3^6*(w1^3+w2^2+w3)' --fan-out " + fan);
  CHECK(r.code == 0);
  std::ifstream in(fan);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(fan_from_text(ss.str()).rays.size() >= 7);

  const std::string dot = (std::filesystem::temp_directory_path() / "mzeta_test.dot").string();
  auto p = mzeta("plumbing " MILNOR_DATA_DIR "/sextic_g.graph --dot " + dot);
  CHECK(p.code == 0);
  CHECK(p.out.find("Z^8 + Z/6") != std::string::npos);
  CHECK(std::filesystem::exists(dot));

  auto v = mzeta("verify-paper");
  CHECK(v.code == 0);
  const std::string bad = temp_file("bad_f6.txt", "(x^2+y^2+z^2)^3+(x^3+y^3+z^3)^2+x^6\n");
  auto neg = mzeta("verify-paper --f6 " + bad);
  CHECK(neg.code != 0);
  CHECK(neg.out.find("FAIL torus sextic milnor") != std::string::npos);
}
