#ifndef MILNOR_ALMOST_ND_HPP
#define MILNOR_ALMOST_ND_HPP

#include <optional>
#include <string>
#include <vector>

#include "milnor/cyclotomic.hpp"
#include "milnor/newton.hpp"

namespace milnor {

struct LocalSingularity {
  std::string label;
  std::string location = "user-supplied";
  long long count = 1;                           // identical copies
  std::optional<long long> mu;                   // explicit value
  std::optional<MultiPolynomial> local_form;     // pseudo-convenient, in admissible coordinates
  std::optional<MultiPolynomial> germ;           // hypersurface germ in n-1 variables

  // filled by resolve_local
  CyclotomicProduct zeta;
  long long mu_value = 0;
  bool zeta_known = false;
  std::vector<std::string> notes;
};

struct DegenerateFaceSpec {
  Weight weight;
  long long d = 0;
  std::vector<LocalSingularity> points;

  long long total_points() const;
  long long milnor_sum() const;  // needs resolved points
};

struct FaceCorrection {
  Weight weight;
  long long d = 0;
  long long milnor_sum = 0;
  std::optional<long long> chi_generic;   // Euler characteristic of the generic divisor
  std::optional<long long> chi_corrected;
};

struct AlmostNDReport {
  int n = 0;
  CyclotomicProduct generic;
  CyclotomicProduct erratum;
  std::vector<CyclotomicProduct> face_zetas;   // one per spec
  std::vector<DegenerateFaceSpec> specs;       // resolved
  std::vector<FaceCorrection> corrections;
  CyclotomicProduct total;
  long long milnor = 0;
  std::vector<std::string> warnings;
};

CyclotomicProduct zeta_generic(const MultiPolynomial& f);
CyclotomicProduct zeta_er(const std::vector<DegenerateFaceSpec>& specs, int n);
CyclotomicProduct local_zeta(const MultiPolynomial& local_form);

struct LocalMilnor {
  long long mu = 0;
  bool completed = false;       // axis monomials were added
  long long completion_power = 0;
  MultiPolynomial used;
};
LocalMilnor local_milnor(const MultiPolynomial& germ);

// Fills zeta, mu_value and notes in the given order of precedence; d is the
// multiplicity of the degenerate face, n the ambient dimension.
void resolve_local(LocalSingularity& q, long long d, int n);

AlmostNDReport assemble(const MultiPolynomial& f, std::vector<DegenerateFaceSpec> specs);

long long divisor_euler_correction(long long chi_generic, long long milnor_sum, int n);

struct HatWeight {
  Weight weight;
  bool primitive = true;
};
HatWeight hat_weight(const Weight& Q, long long dQ);

// Local zeta factor at a singular point of the projective hypersurface with
// germ g, inside f_d + z^{d+1}: (1 - t^{d+1})^{-1} / zeta_g(t^{d+1}).
CyclotomicProduct hat_local_zeta(const MultiPolynomial& germ, long long d);

struct ShiftResult {
  CyclotomicProduct homogeneous;   // zeta of the generic homogeneous part
  CyclotomicProduct shifted;       // after the Milnor correction
  std::vector<CyclotomicProduct> local;
  std::vector<LocalSingularity> points;  // resolved
  CyclotomicProduct total;
  long long milnor_total = 0;      // sum of local Milnor numbers
  long long milnor = 0;
};

ShiftResult shift_zeta(const MultiPolynomial& f_d, std::vector<LocalSingularity> points);

struct TorusCurveResult {
  long long p = 0, q = 0;
  CyclotomicProduct shifted;
  CyclotomicProduct local;
  long long points = 0;
  CyclotomicProduct total;
  long long milnor = 0;
};
TorusCurveResult torus_curve_zeta(long long p, long long q);

}  // namespace milnor

#endif  // MILNOR_ALMOST_ND_HPP
