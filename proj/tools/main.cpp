// mzeta: monodromy zeta functions, resolutions and plumbing graphs.
#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "milnor/paper_suite.hpp"
#include "milnor/report.hpp"

using namespace milnor;

namespace {

struct Options {
  std::string poly, vars, mode, config, format = "text", fan_out, reference, dot, data_dir = MILNOR_DATA_DIR;
  std::string f6_file, g6_file;
  bool strict = false;
};

// Identifiers of the polynomial text in alphabetical order.
std::vector<std::string> infer_vars(const std::string& text, const std::string& generator) {
  std::set<std::string> names;
  for (size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      names.insert(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  names.erase(generator);
  return {names.begin(), names.end()};
}

JobConfig make_job(const Options& o) {
  JobConfig job;
  if (!o.config.empty()) job = read_job_file(o.config);
  if (!o.poly.empty()) job.polynomial = o.poly;
  if (!o.vars.empty()) job.vars = split_list(o.vars);
  if (!o.mode.empty()) job.mode = parse_mode(o.mode);
  else if (o.config.empty()) job.mode = Mode::almost_nd;
  if (!o.reference.empty()) job.reference = o.reference;
  if (job.polynomial.empty() && job.mode != Mode::plumbing) throw ParseError("no polynomial: use --poly or --config");
  if (job.vars.empty()) job.vars = infer_vars(job.polynomial, job.field ? job.generator : "");
  return job;
}

std::string format_of(const Options& o, const JobConfig& job, const CLI::App& sub) {
  if (sub.count("--format")) return o.format;
  return o.config.empty() ? o.format : job.format;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

void emit(const std::string& format, const std::string& text, const nlohmann::json& j) {
  if (format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

int run_verify(const Options& o) {
  PaperFixtures fx = default_fixtures(o.data_dir);
  auto read = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
  };
  if (!o.f6_file.empty()) fx.f6 = read(o.f6_file);
  if (!o.g6_file.empty()) fx.g6 = read(o.g6_file);
  const auto cases = verify_paper(fx);
  int failed = 0;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cases) {
    if (!c.pass) ++failed;
    arr.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    if (o.format == "json") continue;
    std::cout << (c.pass ? "ok   " : "FAIL ") << c.name << "\n";
    if (!c.pass) std::cout << "     expected: " << c.expected << "\n     actual:   " << c.actual << "\n";
  }
  if (o.format == "json")
    std::cout << nlohmann::json{{"cases", arr}, {"failed", failed}}.dump(2) << "\n";
  else
    std::cout << cases.size() - failed << "/" << cases.size() << " cases pass\n";
  return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monodromy zeta functions of almost non-degenerate functions"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--poly", o.poly, "polynomial text");
    s->add_option("--vars", o.vars, "comma separated variable order");
    s->add_option("--config", o.config, "job configuration file")->check(CLI::ExistingFile);
    s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--fan-out", o.fan_out, "write the regular fan to this file");
    s->add_flag("--strict", o.strict, "unknown non-degeneracy verdicts are errors");
  };

  auto* zeta = app.add_subcommand("zeta", "zeta function and Milnor number");
  add_common(zeta);
  zeta->add_option("--mode", o.mode, "nondegenerate, almost-nd, shift, local");

  auto* resolve = app.add_subcommand("resolve", "toric resolution data (n <= 3)");
  add_common(resolve);

  auto* plumbing = app.add_subcommand("plumbing", "plumbing graph homology");
  plumbing->add_option("graph", o.config, "graph file")->required()->check(CLI::ExistingFile);
  plumbing->add_option("--reference", o.reference, "reference function used to solve self-intersections");
  plumbing->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  plumbing->add_option("--dot", o.dot, "write the graph in DOT format to this file");

  auto* verify = app.add_subcommand("verify-paper", "run the regression suite of worked examples");
  verify->add_option("--data", o.data_dir, "fixture directory");
  verify->add_option("--f6", o.f6_file, "override the torus sextic fixture");
  verify->add_option("--g6", o.g6_file, "override the non-torus sextic fixture");
  verify->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*zeta) {
      JobConfig job = make_job(o);
      if (!o.fan_out.empty())
        write_file(o.fan_out, fan_to_text(regularize(dual_diagram(parse_with_field(job.polynomial, job.vars, job.field,
                                                                                   job.generator)))));
      ZetaReport r = run_zeta(job);
      emit(format_of(o, job, *zeta), render_text(r), to_json(r));
      if (o.strict && r.unknown > 0) {
        std::cerr << "error: " << r.unknown << " non-degeneracy verdict(s) unknown\n";
        return 3;
      }
      return 0;
    }
    if (*resolve) {
      JobConfig job = make_job(o);
      ResolveReport r = run_resolve(job);
      if (!o.fan_out.empty()) write_file(o.fan_out, fan_to_text(r.fan));
      emit(format_of(o, job, *resolve), render_text(r), to_json(r));
      return 0;
    }
    if (*plumbing) {
      PlumbingReport r = run_plumbing(o.config, o.reference);
      if (!o.dot.empty()) write_file(o.dot, r.dot);
      emit(o.format, render_text(r), to_json(r));
      return 0;
    }
    return run_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
