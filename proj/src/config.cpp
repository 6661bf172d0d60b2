#include "milnor/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace milnor {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long long to_ll(const std::string& v, int line) {
  try {
    size_t used = 0;
    long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ParseError("config line " + std::to_string(line) + ": expected an integer, got '" + v + "'");
  }
}

FieldPtr field_from_text(const std::string& text, const std::string& generator) {
  MultiPolynomial m = parse_polynomial(text, {generator});
  const long long deg = m.total_degree();
  if (deg < 2) throw ParseError("field polynomial must have degree at least 2");
  std::vector<BigInt> coeffs(deg + 1, BigInt(0));
  for (const auto& [e, c] : m.terms()) {
    if (!c.is_rational() || denominator(c.to_rational()) != 1) throw ParseError("field polynomial must have integer coefficients");
    coeffs[e[0]] = numerator(c.to_rational());
  }
  if (coeffs.back() != 1) throw ParseError("field polynomial must be monic");
  try {
    return make_field(coeffs);
  } catch (const DomainError& e) {
    throw ParseError(std::string("field polynomial: ") + e.what());
  }
}

}  // namespace

std::string to_string(Mode m) {
  switch (m) {
    case Mode::nondegenerate: return "nondegenerate";
    case Mode::almost_nd: return "almost-nd";
    case Mode::shift: return "shift";
    case Mode::local: return "local";
    case Mode::plumbing: return "plumbing";
  }
  return "?";
}

Mode parse_mode(const std::string& text) {
  for (Mode m : {Mode::nondegenerate, Mode::almost_nd, Mode::shift, Mode::local, Mode::plumbing})
    if (to_string(m) == text) return m;
  throw ParseError("unknown mode '" + text + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

JobConfig parse_job(const std::string& text, const std::string& base_dir) {
  JobConfig job;
  enum class Where { top, face, point } where = Where::top;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool have_mode = false;
  auto current_point = [&]() -> PointConfig& {
    if (!job.faces.empty()) return job.faces.back().points.back();
    return job.points.back();
  };
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::string s = trim(raw);
    if (s.empty()) continue;
    if (s == "[face]") {
      if (!job.points.empty()) throw ParseError("config line " + std::to_string(line) + ": [face] after a free [point]");
      job.faces.emplace_back();
      where = Where::face;
      continue;
    }
    if (s == "[point]") {
      PointConfig p;
      if (job.faces.empty()) {
        job.points.push_back(p);
        job.points.back().label = "q" + std::to_string(job.points.size());
      } else {
        auto& pts = job.faces.back().points;
        pts.push_back(p);
        pts.back().label = "q" + std::to_string(pts.size());
      }
      where = Where::point;
      continue;
    }
    if (s.front() == '[') throw ParseError("config line " + std::to_string(line) + ": unknown section " + s);
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(line) + ": expected key = value");
    const std::string key = trim(s.substr(0, eq)), value = trim(s.substr(eq + 1));
    auto bad_key = [&]() { throw ParseError("config line " + std::to_string(line) + ": unknown key '" + key + "'"); };
    if (where == Where::top) {
      if (key == "polynomial") {
        job.polynomial += (job.polynomial.empty() ? "" : " ") + value;
      } else if (key == "polynomial_file") {
        std::filesystem::path p = value;
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        std::ifstream f(p);
        if (!f) throw ParseError("cannot read polynomial file '" + p.string() + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        job.polynomial = ss.str();
      } else if (key == "vars") {
        job.vars = split_list(value);
      } else if (key == "mode") {
        job.mode = parse_mode(value);
        have_mode = true;
      } else if (key == "format") {
        if (value != "text" && value != "json") throw ParseError("format must be text or json");
        job.format = value;
      } else if (key == "field") {
        job.field = value;
      } else if (key == "generator") {
        job.generator = value;
      } else if (key == "graph") {
        std::filesystem::path p = value;
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        job.graph = p.string();
      } else if (key == "reference") {
        job.reference = value;
      } else {
        bad_key();
      }
    } else if (where == Where::face) {
      auto& f = job.faces.back();
      if (key == "weight") {
        for (const auto& w : split_list(value)) f.weight.push_back(to_ll(w, line));
      } else if (key == "d") {
        f.d = to_ll(value, line);
      } else {
        bad_key();
      }
    } else {
      PointConfig& p = current_point();
      if (key == "label") p.label = value;
      else if (key == "location") p.location = value;
      else if (key == "count") p.count = to_ll(value, line);
      else if (key == "mu") p.mu = to_ll(value, line);
      else if (key == "local_vars") p.local_vars = split_list(value);
      else if (key == "local_form") p.local_form = value;
      else if (key == "germ_vars") p.germ_vars = split_list(value);
      else if (key == "germ") p.germ = value;
      else bad_key();
    }
  }
  if (!have_mode && !job.faces.empty()) job.mode = Mode::almost_nd;
  if (job.mode != Mode::plumbing && job.polynomial.empty()) throw ParseError("config has no polynomial");
  if (job.mode == Mode::plumbing && job.graph.empty()) throw ParseError("plumbing mode needs a graph file");
  for (const auto& f : job.faces) {
    if (f.weight.empty()) throw ParseError("[face] without weight");
    if (f.points.empty()) throw ParseError("[face] without [point] entries");
  }
  return job;
}

JobConfig read_job_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_job(ss.str(), std::filesystem::path(path).parent_path().string());
}

MultiPolynomial parse_with_field(const std::string& text, const std::vector<std::string>& vars,
                                 const std::optional<std::string>& field, const std::string& generator) {
  if (!field) return parse_polynomial(text, vars);
  for (const auto& v : vars)
    if (v == generator) throw ParseError("variable name '" + v + "' clashes with the field generator");
  FieldPtr K = field_from_text(*field, generator);
  std::vector<std::string> all = vars;
  all.push_back(generator);
  MultiPolynomial raw = parse_polynomial(text, all);
  const int g = static_cast<int>(vars.size());
  const Scalar alpha = Scalar::generator(K);
  MultiPolynomial out(vars);
  for (const auto& [e, c] : raw.terms()) {
    Scalar k = c;
    for (long long i = 0; i < e[g]; ++i) k *= alpha;
    Exponent f(e.begin(), e.begin() + g);
    out.add_term(f, k);
  }
  return out;
}

std::vector<LocalSingularity> build_points(const JobConfig& job, const std::vector<PointConfig>& points) {
  std::vector<LocalSingularity> out;
  const int n = static_cast<int>(job.vars.size());
  for (const auto& pc : points) {
    LocalSingularity q;
    q.label = pc.label;
    if (!pc.location.empty()) q.location = pc.location;
    q.count = pc.count;
    q.mu = pc.mu;
    if (pc.local_form) {
      auto vars = pc.local_vars.empty() ? default_vars("w", n) : pc.local_vars;
      if (static_cast<int>(vars.size()) != n) throw ParseError("local_vars of " + pc.label + " must list " + std::to_string(n) + " names");
      q.local_form = parse_with_field(*pc.local_form, vars, job.field, job.generator);
    }
    if (pc.germ) {
      auto vars = pc.germ_vars;
      if (vars.empty()) {
        vars = default_vars("w", n);
        vars.erase(vars.begin());
      }
      if (static_cast<int>(vars.size()) != n - 1) throw ParseError("germ_vars of " + pc.label + " must list " + std::to_string(n - 1) + " names");
      q.germ = parse_with_field(*pc.germ, vars, job.field, job.generator);
    }
    if (!q.mu && !q.local_form && !q.germ) throw ParseError("point " + pc.label + " needs mu, local_form or germ");
    out.push_back(q);
  }
  return out;
}

std::vector<DegenerateFaceSpec> build_specs(const JobConfig& job) {
  std::vector<DegenerateFaceSpec> specs;
  for (const auto& fc : job.faces) {
    if (fc.weight.size() != job.vars.size()) throw ParseError("face weight has the wrong length");
    DegenerateFaceSpec s;
    s.weight = fc.weight;
    s.d = fc.d.value_or(0);
    s.points = build_points(job, fc.points);
    specs.push_back(std::move(s));
  }
  return specs;
}

}  // namespace milnor
