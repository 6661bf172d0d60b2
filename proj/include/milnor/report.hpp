#ifndef MILNOR_REPORT_HPP
#define MILNOR_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "milnor/config.hpp"
#include "milnor/elimination.hpp"
#include "milnor/plumbing.hpp"
#include "milnor/toric.hpp"

namespace milnor {

struct NewtonFaceEntry {
  Weight weight;
  long long d = 0;
  int dim = 0;
  std::vector<Point> points;
  std::string verdict;
};

struct LocalEntry {
  std::string label;
  std::string location;
  Weight weight;
  long long count = 1;
  long long mu = 0;
  CyclotomicProduct zeta;
  std::vector<std::string> notes;
};

struct ZetaReport {
  std::string input;
  std::vector<std::string> vars;
  Mode mode = Mode::nondegenerate;
  std::vector<NewtonFaceEntry> faces;
  std::vector<Weight> weights;  // maximal face normals
  CyclotomicProduct generic, erratum, total;
  std::vector<LocalEntry> local;
  std::vector<FaceCorrection> corrections;
  long long milnor = 0;
  std::vector<std::string> warnings;
  int unknown = 0;
};

ZetaReport run_zeta(const JobConfig& job);

struct ChartEntry {
  IntMat generators;
  Exponent multiplicities;
  MultiPolynomial strict_transform;
};

struct ExceptionalEntry {
  Weight ray;
  long long d = 0;
  MultiPolynomial equation;
  std::vector<AlgebraicPoint> singular_points;
  std::string note;
};

struct ResolveReport {
  std::string input;
  std::vector<std::string> vars;
  RegularFan fan;
  std::vector<ChartEntry> charts;
  std::vector<ExceptionalEntry> exceptional;
  std::vector<std::string> warnings;
};

ResolveReport run_resolve(const JobConfig& job);

struct PlumbingReport {
  std::string source;
  ResolutionGraph graph;
  IntMat matrix;
  BigInt det;
  std::vector<BigInt> invariant_factors;
  AbelianGroup h1;
  AbelianGroup h1_presentation;
  Presentation presentation;
  std::string canonical;
  std::string dot;
};

PlumbingReport run_plumbing(const std::string& graph_path, const std::string& reference);

std::string render_weight(const Weight& w);

std::string render_text(const ZetaReport& r);
std::string render_text(const ResolveReport& r);
std::string render_text(const PlumbingReport& r);
nlohmann::json to_json(const ZetaReport& r);
nlohmann::json to_json(const ResolveReport& r);
nlohmann::json to_json(const PlumbingReport& r);

}  // namespace milnor

#endif  // MILNOR_REPORT_HPP
