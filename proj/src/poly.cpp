#include "milnor/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace milnor {

bool GradedOrder::operator()(const Exponent& a, const Exponent& b) const {
  long long da = std::accumulate(a.begin(), a.end(), 0LL);
  long long db = std::accumulate(b.begin(), b.end(), 0LL);
  if (da != db) return da > db;
  return a > b;
}

MultiPolynomial MultiPolynomial::constant(std::vector<std::string> vars, const Scalar& c) {
  MultiPolynomial p(std::move(vars));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

MultiPolynomial MultiPolynomial::variable(std::vector<std::string> vars, int index) {
  MultiPolynomial p(std::move(vars));
  Exponent e(p.nvars(), 0);
  e.at(index) = 1;
  p.add_term(e, Scalar(1));
  return p;
}

MultiPolynomial MultiPolynomial::monomial(std::vector<std::string> vars, const Exponent& e,
                                          const Scalar& c) {
  MultiPolynomial p(std::move(vars));
  p.add_term(e, c);
  return p;
}

std::vector<Exponent> MultiPolynomial::support() const {
  std::vector<Exponent> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

Scalar MultiPolynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

long long MultiPolynomial::total_degree() const {
  long long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0LL));
  return d;
}

long long MultiPolynomial::degree_in(int var) const {
  long long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

FieldPtr MultiPolynomial::field() const {
  FieldPtr f;
  for (const auto& [e, c] : terms_) f = join_fields(f, c.field());
  return f;
}

void MultiPolynomial::add_term(const Exponent& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != nvars()) throw DomainError("exponent length mismatch");
  for (long long x : e)
    if (x < 0) throw DomainError("negative exponent");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void MultiPolynomial::check_compatible(const MultiPolynomial& o) const {
  if (vars_.size() != o.vars_.size())
    throw DomainError("polynomials live in different variable counts");
}

MultiPolynomial MultiPolynomial::operator-() const {
  MultiPolynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
  a.check_compatible(b);
  MultiPolynomial r(a.vars_);
  Exponent e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPolynomial MultiPolynomial::scaled(const Scalar& c) const {
  MultiPolynomial r(vars_);
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

MultiPolynomial MultiPolynomial::pow(long long k) const {
  if (k < 0) throw DomainError("negative power of a polynomial");
  MultiPolynomial r = constant(vars_, Scalar(1)), base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
  return a.vars_.size() == b.vars_.size() && a.terms_ == b.terms_;
}

MultiPolynomial MultiPolynomial::derivative(int var) const {
  MultiPolynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * Scalar(e[var]));
  }
  return r;
}

Scalar MultiPolynomial::evaluate(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != nvars()) throw DomainError("evaluation point has wrong length");
  Scalar acc(0);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars(); ++i)
      for (long long k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

MultiPolynomial MultiPolynomial::substitute(int var, const Scalar& value) const {
  MultiPolynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (long long k = 0; k < e[var]; ++k) t *= value;
    Exponent d = e;
    d[var] = 0;
    r.add_term(d, t);
  }
  return r;
}

MultiPolynomial MultiPolynomial::drop_vars(const std::vector<int>& which) const {
  std::vector<std::string> nv;
  std::vector<int> keep;
  for (int i = 0; i < nvars(); ++i)
    if (std::find(which.begin(), which.end(), i) == which.end()) {
      nv.push_back(vars_[i]);
      keep.push_back(i);
    }
  MultiPolynomial r(nv);
  for (const auto& [e, c] : terms_) {
    Exponent d;
    for (int i = 0; i < nvars(); ++i) {
      bool kept = std::find(keep.begin(), keep.end(), i) != keep.end();
      if (kept)
        d.push_back(e[i]);
      else if (e[i] != 0)
        throw DomainError("dropping variable " + vars_[i] + " which occurs");
    }
    r.add_term(d, c);
  }
  return r;
}

MultiPolynomial MultiPolynomial::with_vars(std::vector<std::string> vars) const {
  if (vars.size() != vars_.size()) throw DomainError("renaming changes the variable count");
  MultiPolynomial r(*this);
  r.vars_ = std::move(vars);
  return r;
}

KPoly MultiPolynomial::as_univariate(int var) const {
  std::vector<Scalar> c(std::max<long long>(degree_in(var) + 1, 0), Scalar(0));
  for (const auto& [e, v] : terms_) {
    for (int i = 0; i < nvars(); ++i)
      if (i != var && e[i] != 0) throw DomainError("polynomial is not univariate");
    c[e[var]] += v;
  }
  return KPoly(c);
}

std::string MultiPolynomial::render(const std::string& gen) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool is_const = std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; });
    std::string cs;
    bool neg = false;
    if (c.is_rational()) {
      Rational q = c.to_rational();
      neg = q < 0;
      if (neg) q = -q;
      if (q != 1 || is_const) cs = milnor::to_string(q);
    } else {
      cs = c.to_string(gen);
      if (!c.needs_parens() && cs[0] == '-') {
        neg = true;
        cs = cs.substr(1);
      }
    }
    os << (neg ? "-" : (first ? "" : "+"));
    first = false;
    std::string mono;
    for (int i = 0; i < nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (!cs.empty()) os << cs << (mono.empty() ? "" : "*");
    os << mono;
  }
  return os.str();
}

// ---------------------------------------------------------------- operations

MultiPolynomial restrict_to(const MultiPolynomial& f, const IndexSet& keep) {
  MultiPolynomial r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    bool ok = true;
    for (int i = 0; i < f.nvars() && ok; ++i)
      if (e[i] > 0 && std::find(keep.begin(), keep.end(), i) == keep.end()) ok = false;
    if (ok) r.add_term(e, c);
  }
  return r;
}

long long weighted_degree(const Exponent& e, const std::vector<long long>& w) {
  if (e.size() != w.size()) throw DomainError("weight length mismatch");
  long long s = 0;
  for (size_t i = 0; i < e.size(); ++i) s = checked_add(s, checked_mul(e[i], w[i]));
  return s;
}

MultiPolynomial face_part(const MultiPolynomial& f, const std::vector<long long>& weight) {
  if (f.is_zero()) throw DomainError("face function of the zero polynomial");
  for (long long w : weight)
    if (w < 0) throw DomainError("weight vectors are non-negative");
  long long m = std::numeric_limits<long long>::max();
  for (const auto& [e, c] : f.terms()) m = std::min(m, weighted_degree(e, weight));
  MultiPolynomial r(f.vars());
  for (const auto& [e, c] : f.terms())
    if (weighted_degree(e, weight) == m) r.add_term(e, c);
  return r;
}

MultiPolynomial monomial_substitute(const MultiPolynomial& f, const IntMat& sigma,
                                    std::vector<std::string> new_vars) {
  const int n = f.nvars();
  if (sigma.rows() != n) throw DomainError("substitution matrix has wrong row count");
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma.data()[i] < 0) throw DomainError("monomial substitution needs non-negative entries");
  const int m = static_cast<int>(sigma.cols());
  if (new_vars.empty()) new_vars = default_vars("u", m);
  MultiPolynomial r(new_vars);
  for (const auto& [e, c] : f.terms()) {
    Exponent d(m, 0);
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < n; ++i) d[j] = checked_add(d[j], checked_mul(sigma(i, j), e[i]));
    r.add_term(d, c);
  }
  return r;
}

std::pair<Exponent, MultiPolynomial> factor_monomial_content(const MultiPolynomial& f) {
  if (f.is_zero()) throw DomainError("monomial content of the zero polynomial");
  Exponent m(f.nvars(), std::numeric_limits<long long>::max());
  for (const auto& [e, c] : f.terms())
    for (int i = 0; i < f.nvars(); ++i) m[i] = std::min(m[i], e[i]);
  MultiPolynomial r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Exponent d = e;
    for (int i = 0; i < f.nvars(); ++i) d[i] -= m[i];
    r.add_term(d, c);
  }
  return {m, r};
}

MultiPolynomial translate(const MultiPolynomial& f, const std::vector<Scalar>& q,
                          const IndexSet& fixed) {
  if (static_cast<int>(q.size()) != f.nvars()) throw DomainError("translation vector has wrong length");
  for (int i : fixed)
    if (!q.at(i).is_zero()) throw DomainError("translation moves a fixed coordinate");
  MultiPolynomial cur = f;
  for (int v = 0; v < f.nvars(); ++v) {
    if (q[v].is_zero()) continue;
    MultiPolynomial next(f.vars());
    for (const auto& [e, c] : cur.terms()) {
      const long long k = e[v];
      // (w + q)^k = sum_j binom(k, j) q^(k-j) w^j
      std::vector<Scalar> qp(k + 1, Scalar(1));
      for (long long j = 1; j <= k; ++j) qp[j] = qp[j - 1] * q[v];
      BigInt binom = 1;
      for (long long j = 0; j <= k; ++j) {
        Exponent d = e;
        d[v] = j;
        next.add_term(d, c * Scalar(binom) * qp[k - j]);
        binom = binom * (k - j) / (j + 1);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

MultiPolynomial linear_change(const MultiPolynomial& f, const MatX<Scalar>& L,
                              const IndexSet& subset) {
  const int k = static_cast<int>(subset.size());
  if (L.rows() != k || L.cols() != k) throw DomainError("linear change has wrong size");
  {
    // invertibility by exact elimination
    MatX<Scalar> a = L;
    for (int c = 0; c < k; ++c) {
      int p = c;
      while (p < k && a(p, c).is_zero()) ++p;
      if (p == k) throw DomainError("singular linear change");
      a.row(c).swap(a.row(p));
      for (int r = c + 1; r < k; ++r) {
        if (a(r, c).is_zero()) continue;
        Scalar fct = a(r, c) / a(c, c);
        for (int j = c; j < k; ++j) a(r, j) -= fct * a(c, j);
      }
    }
  }
  std::vector<MultiPolynomial> images;
  for (int i = 0; i < k; ++i) {
    MultiPolynomial li(f.vars());
    for (int j = 0; j < k; ++j) {
      Exponent e(f.nvars(), 0);
      e[subset[j]] = 1;
      li.add_term(e, L(i, j));
    }
    images.push_back(li);
  }
  std::vector<std::map<long long, MultiPolynomial>> powers(k);
  auto power = [&](int i, long long p) -> const MultiPolynomial& {
    auto it = powers[i].find(p);
    if (it != powers[i].end()) return it->second;
    return powers[i].emplace(p, images[i].pow(p)).first->second;
  };
  MultiPolynomial r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Exponent rest = e;
    for (int i : subset) rest[i] = 0;
    MultiPolynomial t = MultiPolynomial::monomial(f.vars(), rest, c);
    for (int i = 0; i < k; ++i)
      if (e[subset[i]] > 0) t = t * power(i, e[subset[i]]);
    r += t;
  }
  return r;
}

std::vector<std::string> default_vars(const std::string& stem, int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

}  // namespace milnor
