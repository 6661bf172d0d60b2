#include "milnor/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace milnor {

std::vector<BigInt> primitive_integer(const QPoly& p) {
  if (p.is_zero()) return {};
  BigInt l = 1;
  for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, BigInt(denominator(c)));
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    BigInt v = BigInt(numerator(c)) * (l / BigInt(denominator(c)));
    out.push_back(v);
    g = boost::multiprecision::gcd(g, v);
  }
  if (g < 0) g = -g;
  for (auto& v : out) v /= g;
  if (out.back() < 0)
    for (auto& v : out) v = -v;
  return out;
}

QPoly from_integer(const std::vector<BigInt>& c) {
  std::vector<Rational> r;
  r.reserve(c.size());
  for (const auto& v : c) r.emplace_back(v);
  return QPoly(r);
}

namespace {

using cld = std::complex<long double>;

cld horner(const std::vector<long double>& c, cld x) {
  cld r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

bool fits_double(const BigInt& v) {
  static const BigInt lim = BigInt(1) << 52;
  return v < lim && v > -lim;
}

}  // namespace

std::vector<std::complex<double>> numeric_roots(const std::vector<BigInt>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<std::complex<double>> out;
  if (d < 1) return out;
  std::vector<long double> cl(c.size());
  long double lead = c.back().convert_to<long double>();
  for (size_t i = 0; i < c.size(); ++i) cl[i] = c[i].convert_to<long double>() / lead;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -static_cast<double>(cl[i]);
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<long double> dl(d);
  for (int i = 1; i <= d; ++i) dl[i - 1] = cl[i] * i;
  for (int i = 0; i < d; ++i) {
    cld z(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
    for (int it = 0; it < 60; ++it) {
      cld fd = horner(dl, z);
      if (std::abs(fd) == 0.0L) break;
      cld step = horner(cl, z) / fd;
      z -= step;
      if (std::abs(step) <= 1e-18L * (1.0L + std::abs(z))) break;
    }
    out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  for (auto& z : out)
    if (std::abs(z.imag()) < 1e-12 * (1.0 + std::abs(z.real()))) z = {z.real(), 0.0};
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

namespace {

// Yun's squarefree decomposition over Q.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  QPoly dp = p.derivative();
  QPoly b = QPoly::gcd(p, dp);
  QPoly c = QPoly::divmod(p, b).first;
  QPoly d = QPoly::divmod(dp, b).first - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    QPoly a = QPoly::gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    c = QPoly::divmod(c, a).first;
    d = QPoly::divmod(d, a).first - c.derivative();
    ++i;
  }
  return out;
}

bool divides_exactly(const std::vector<BigInt>& f, const std::vector<BigInt>& g,
                     std::vector<BigInt>& quotient) {
  auto [q, r] = QPoly::divmod(from_integer(g), from_integer(f));
  if (!r.is_zero()) return false;
  quotient = primitive_integer(q);
  return true;
}

// Splits a squarefree primitive integer polynomial into irreducible factors.
void split_squarefree(std::vector<BigInt> g, int mult, std::vector<QFactor>& out) {
  if (g.size() <= 2) {
    if (g.size() == 2) out.push_back({g, mult});
    return;
  }
  if (g[0] == 0) {
    out.push_back({{BigInt(0), BigInt(1)}, mult});
    std::vector<BigInt> rest(g.begin() + 1, g.end());
    split_squarefree(rest, mult, out);
    return;
  }
  const int deg = static_cast<int>(g.size()) - 1;
  if (deg > 24) throw DomainError("univariate factorization limited to degree 24");
  auto roots_d = numeric_roots(g);
  std::vector<cld> roots(roots_d.begin(), roots_d.end());
  std::vector<bool> used(roots.size(), false);
  for (int k = 1; 2 * k <= static_cast<int>(g.size()) - 1; ++k) {
    bool again = true;
    while (again && 2 * k <= static_cast<int>(g.size()) - 1) {
      again = false;
      std::vector<int> free_idx;
      for (size_t i = 0; i < roots.size(); ++i)
        if (!used[i]) free_idx.push_back(static_cast<int>(i));
      std::vector<int> pick;
      std::function<bool(size_t)> rec = [&](size_t start) -> bool {
        if (static_cast<int>(pick.size()) == k) {
          std::vector<cld> prod{cld(g.back().convert_to<long double>())};
          for (int idx : pick) {
            std::vector<cld> next(prod.size() + 1, cld(0));
            for (size_t j = 0; j < prod.size(); ++j) {
              next[j + 1] += prod[j];
              next[j] -= prod[j] * roots[idx];
            }
            prod = next;
          }
          std::vector<BigInt> cand;
          for (const auto& v : prod) {
            long double mag = std::abs(v);
            if (std::abs(v.imag()) > 1e-6L * (1.0L + mag)) return false;
            long double rr = std::round(v.real());
            if (std::abs(rr) > 4.0e15L) throw DomainError("factor coefficients out of rounding range");
            if (std::abs(v.real() - rr) > 1e-5L * (1.0L + mag)) return false;
            cand.emplace_back(static_cast<long long>(rr));
          }
          cand = primitive_integer(from_integer(cand));
          if (static_cast<int>(cand.size()) != k + 1) return false;
          std::vector<BigInt> quot;
          if (!divides_exactly(cand, g, quot)) return false;
          out.push_back({cand, mult});
          for (int idx : pick) used[idx] = true;
          g = quot;
          return true;
        }
        for (size_t i = start; i < free_idx.size(); ++i) {
          pick.push_back(free_idx[i]);
          if (rec(i + 1)) return true;
          pick.pop_back();
        }
        return false;
      };
      again = rec(0);
    }
  }
  if (g.size() > 1) out.push_back({g, mult});
}

}  // namespace

std::vector<QFactor> factor_over_q(const QPoly& p) {
  if (p.is_zero()) throw DomainError("factorization of the zero polynomial");
  std::vector<QFactor> out;
  for (auto& [part, mult] : squarefree_decomposition(p)) {
    auto g = primitive_integer(part);
    for (const auto& v : g)
      if (!fits_double(v)) throw DomainError("factor coefficients out of rounding range");
    split_squarefree(g, mult, out);
  }
  std::sort(out.begin(), out.end(), [](const QFactor& a, const QFactor& b) {
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    return a.poly < b.poly;
  });
  return out;
}

bool is_irreducible_over_q(const std::vector<BigInt>& c) {
  auto f = factor_over_q(from_integer(c));
  return f.size() == 1 && f[0].multiplicity == 1 && f[0].poly.size() == c.size();
}

std::string render_upoly(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? "-" : "+");
    first = false;
    if (k == 0 || c != 1) os << c << (k > 0 ? "*" : "");
    if (k > 0) os << var << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os.str();
}

}  // namespace milnor
