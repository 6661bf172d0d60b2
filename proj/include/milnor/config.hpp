#ifndef MILNOR_CONFIG_HPP
#define MILNOR_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "milnor/almost_nd.hpp"

namespace milnor {

enum class Mode { nondegenerate, almost_nd, shift, local, plumbing };
std::string to_string(Mode m);
Mode parse_mode(const std::string& text);

struct PointConfig {
  std::string label;
  std::string location;
  long long count = 1;
  std::optional<long long> mu;
  std::vector<std::string> local_vars;
  std::optional<std::string> local_form;
  std::vector<std::string> germ_vars;
  std::optional<std::string> germ;
};

struct FaceConfig {
  Weight weight;
  std::optional<long long> d;
  std::vector<PointConfig> points;
};

// Flat key = value file. Top-level keys: polynomial, vars, mode, format,
// field (minimal polynomial in the generator, e.g. "alpha^2-6"), generator,
// graph, reference. Sections [face] (weight, d) and [point] (label,
// location, count, mu, local_vars, local_form, germ_vars, germ); a [point]
// belongs to the preceding [face], or to the job itself in shift mode.
struct JobConfig {
  std::string polynomial;
  std::vector<std::string> vars;
  Mode mode = Mode::nondegenerate;
  std::string format = "text";
  std::optional<std::string> field;
  std::string generator = "alpha";
  std::string graph;
  std::string reference;
  std::vector<FaceConfig> faces;
  std::vector<PointConfig> points;
};

JobConfig parse_job(const std::string& text, const std::string& base_dir = "");
JobConfig read_job_file(const std::string& path);

std::vector<std::string> split_list(const std::string& text);

// Parses a polynomial whose coefficients may involve the generator of the
// configured field.
MultiPolynomial parse_with_field(const std::string& text, const std::vector<std::string>& vars,
                                 const std::optional<std::string>& field, const std::string& generator);

std::vector<DegenerateFaceSpec> build_specs(const JobConfig& job);
std::vector<LocalSingularity> build_points(const JobConfig& job, const std::vector<PointConfig>& points);

}  // namespace milnor

#endif  // MILNOR_CONFIG_HPP
