#include "milnor/cyclotomic.hpp"

#include <regex>
#include <sstream>

namespace milnor {

CyclotomicProduct::CyclotomicProduct(
    std::initializer_list<std::pair<const long long, long long>> init) {
  for (const auto& [m, e] : init) multiply_factor(m, e);
}

CyclotomicProduct CyclotomicProduct::factor(long long m, long long e) {
  CyclotomicProduct z;
  z.multiply_factor(m, e);
  return z;
}

long long CyclotomicProduct::exponent(long long m) const {
  auto it = e_.find(m);
  return it == e_.end() ? 0 : it->second;
}

void CyclotomicProduct::multiply_factor(long long m, long long e) {
  if (m <= 0) throw DomainError("cyclotomic factor needs a positive period");
  if (e == 0) return;
  long long v = checked_add(exponent(m), e);
  if (v == 0)
    e_.erase(m);
  else
    e_[m] = v;
}

CyclotomicProduct zp_mul(const CyclotomicProduct& a, const CyclotomicProduct& b) {
  CyclotomicProduct r = a;
  for (const auto& [m, e] : b.exponents()) r.multiply_factor(m, e);
  return r;
}

CyclotomicProduct zp_inv(const CyclotomicProduct& a) { return zp_pow(a, -1); }

CyclotomicProduct zp_pow(const CyclotomicProduct& a, long long k) {
  CyclotomicProduct r;
  for (const auto& [m, e] : a.exponents()) r.multiply_factor(m, checked_mul(e, k));
  return r;
}

long long degree(const CyclotomicProduct& z) {
  long long d = 0;
  for (const auto& [m, e] : z.exponents()) d = checked_add(d, checked_mul(m, e));
  return d;
}

long long milnor_from_zeta(const CyclotomicProduct& z, int n) {
  long long v = checked_add(degree(z), 1);
  long long mu = n % 2 == 0 ? v : -v;
  if (mu < 0)
    throw InconsistencyError("zeta function " + render_zeta(z) + " gives negative Milnor number " +
                             std::to_string(mu));
  return mu;
}

std::string render_zeta(const CyclotomicProduct& z) {
  if (z.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, e] : z.exponents()) {
    if (!first) os << " * ";
    first = false;
    os << "(1-t^" << m << ")^" << e;
  }
  return os.str();
}

CyclotomicProduct parse_zeta(const std::string& text) {
  CyclotomicProduct z;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "1") return z;
  static const std::regex factor_re(R"(\(1-t(?:\^(\d+))?\)(?:\^(-?\d+))?)");
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == '*') {
      ++pos;
      continue;
    }
    std::smatch m;
    std::string rest = s.substr(pos);
    if (!std::regex_search(rest, m, factor_re, std::regex_constants::match_continuous))
      throw ParseError("cannot read zeta factor at position " + std::to_string(pos));
    long long period = m[1].matched ? std::stoll(m[1].str()) : 1;
    long long e = m[2].matched ? std::stoll(m[2].str()) : 1;
    z.multiply_factor(period, e);
    pos += m.length(0);
  }
  return z;
}

std::vector<BigInt> zeta_series(const CyclotomicProduct& z, int order) {
  std::vector<BigInt> s(order + 1, BigInt(0));
  s[0] = 1;
  for (const auto& [m, e] : z.exponents()) {
    // multiply by (1 - t^m)^e via repeated factors
    long long times = e < 0 ? -e : e;
    for (long long r = 0; r < times; ++r) {
      if (e > 0) {
        for (int i = order; i >= m; --i) s[i] -= s[i - m];
      } else {
        for (int i = static_cast<int>(m); i <= order; ++i) s[i] += s[i - m];
      }
    }
  }
  return s;
}

}  // namespace milnor
