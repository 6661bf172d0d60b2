#include "milnor/scalar.hpp"

#include <sstream>

#include "milnor/upoly.hpp"

namespace milnor {

std::string to_string(const Rational& q) { return q.str(); }
std::string to_string(const BigInt& z) { return z.str(); }

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw ParseError("not a rational number: '" + text + "'");
  }
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer overflow in exponent arithmetic");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer overflow in exponent arithmetic");
  return r;
}

long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<long long> primitive(std::vector<long long> v) {
  long long g = 0;
  for (long long x : v) g = gcd_ll(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

long long det_ll(const IntMat& m) {
  BigMat b = m.cast<BigInt>();
  BigInt d = det_bareiss(b);
  if (d > BigInt(std::numeric_limits<long long>::max()) ||
      d < BigInt(std::numeric_limits<long long>::min()))
    throw DomainError("determinant exceeds machine range");
  return d.convert_to<long long>();
}

std::vector<long long> cross_product(const IntMat& rows) {
  const Eigen::Index n = rows.cols();
  if (rows.rows() != n - 1) throw DomainError("cross product needs n-1 rows");
  std::vector<long long> out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    IntMat minor(n - 1, n - 1);
    for (Eigen::Index r = 0; r < n - 1; ++r)
      for (Eigen::Index c = 0, k = 0; c < n; ++c)
        if (c != i) minor(r, k++) = rows(r, c);
    long long d = n == 1 ? 1 : det_ll(minor);
    out[i] = (i % 2 == 0) ? d : -d;
  }
  return out;
}

int rank_ll(const IntMat& m) {
  MatX<Rational> a = m.cast<Rational>();
  int rank = 0;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index p = rank;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.row(rank).swap(a.row(p));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(rank, c);
      for (Eigen::Index k = c; k < cols; ++k) a(r, k) -= f * a(rank, k);
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------- fields

NumberField::NumberField(std::vector<BigInt> monic_coeffs) : minpoly_(std::move(monic_coeffs)) {
  if (minpoly_.size() < 3) throw DomainError("extension needs a minimal polynomial of degree >= 2");
  if (minpoly_.back() != 1) throw DomainError("minimal polynomial must be monic");
  QPoly p = from_integer(minpoly_);
  if (QPoly::gcd(p, p.derivative()).degree() > 0)
    throw DomainError("minimal polynomial is not squarefree");
  if (!is_irreducible_over_q(minpoly_)) throw DomainError("minimal polynomial is reducible over Q");
  roots_ = numeric_roots(minpoly_);
}

std::string NumberField::minpoly_string(const std::string& var) const {
  return render_upoly(from_integer(minpoly_), var);
}

FieldPtr make_field(std::vector<BigInt> monic_coeffs) {
  return std::make_shared<const NumberField>(std::move(monic_coeffs));
}

FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || a->same_as(*b)) return a;
  throw DomainError("towers of extensions are not supported: " + a->minpoly_string() + " vs " +
                    b->minpoly_string());
}

FieldPtr common_field(const std::vector<Scalar>& values) {
  FieldPtr f;
  for (const auto& v : values) f = join_fields(f, v.field());
  return f;
}

// ---------------------------------------------------------------- scalars

Scalar::Scalar(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  if (!field_) {
    q_ = coeffs.empty() ? Rational(0) : coeffs[0];
    for (size_t i = 1; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) throw DomainError("rational scalar with non-constant coefficients");
    return;
  }
  v_ = std::move(coeffs);
  reduce();
}

Scalar Scalar::generator(FieldPtr field) { return Scalar(std::move(field), {Rational(0), Rational(1)}); }

bool Scalar::is_zero() const { return !field_ && q_ == 0; }
bool Scalar::is_one() const { return !field_ && q_ == 1; }

Rational Scalar::to_rational() const {
  if (field_) throw DomainError("scalar is not rational");
  return q_;
}

std::vector<Rational> Scalar::coefficients() const {
  if (!field_) return {q_};
  return v_;
}

std::complex<double> Scalar::approx(int root_index) const {
  if (!field_) return {q_.convert_to<double>(), 0.0};
  std::complex<double> r = field_->roots().at(root_index), acc = 0, pw = 1;
  for (const auto& c : v_) {
    acc += c.convert_to<double>() * pw;
    pw *= r;
  }
  return acc;
}

void Scalar::promote(const FieldPtr& f) {
  if (field_ || !f) return;
  field_ = f;
  v_.assign(f->degree(), Rational(0));
  v_[0] = q_;
  q_ = 0;
}

void Scalar::reduce() {
  const int d = field_->degree();
  const auto& m = field_->minpoly();
  for (int k = static_cast<int>(v_.size()) - 1; k >= d; --k) {
    if (v_[k] == 0) continue;
    Rational c = v_[k];
    for (int j = 0; j <= d; ++j) v_[k - d + j] -= c * Rational(m[j]);
  }
  v_.resize(d, Rational(0));
  demote();
}

void Scalar::demote() {
  for (size_t i = 1; i < v_.size(); ++i)
    if (v_[i] != 0) return;
  q_ = v_.empty() ? Rational(0) : v_[0];
  v_.clear();
  field_.reset();
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.q_ = -r.q_;
  for (auto& c : r.v_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!field_ && !o.field_) {
    q_ += o.q_;
    return *this;
  }
  FieldPtr f = join_fields(field_, o.field_);
  promote(f);
  Scalar b(o);
  b.promote(f);
  for (size_t i = 0; i < v_.size(); ++i) v_[i] += b.v_[i];
  demote();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!field_ && !o.field_) {
    q_ *= o.q_;
    return *this;
  }
  if (!o.field_) {
    for (auto& c : v_) c *= o.q_;
    demote();
    return *this;
  }
  if (!field_) {
    Rational s = q_;
    *this = o;
    for (auto& c : v_) c *= s;
    demote();
    return *this;
  }
  FieldPtr f = join_fields(field_, o.field_);
  std::vector<Rational> prod(v_.size() + o.v_.size() - 1, Rational(0));
  for (size_t i = 0; i < v_.size(); ++i)
    if (v_[i] != 0)
      for (size_t j = 0; j < o.v_.size(); ++j) prod[i + j] += v_[i] * o.v_[j];
  field_ = f;
  v_ = std::move(prod);
  reduce();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (!field_) return Scalar(Rational(1) / q_);
  QPoly a(v_), m = from_integer(field_->minpoly()), s, t;
  QPoly g = QPoly::ext_gcd(a, m, s, t);
  if (g.degree() != 0) throw DomainError("non-invertible field element");
  return Scalar(field_, s.coeffs());
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.field_ && !b.field_) return a.q_ == b.q_;
  if (!a.field_ || !b.field_) return false;
  if (!a.field_->same_as(*b.field_)) return false;
  return a.v_ == b.v_;
}

bool Scalar::needs_parens() const {
  if (!field_) return false;
  int nz = 0;
  for (const auto& c : v_) nz += c != 0;
  return nz > 1;
}

std::string Scalar::to_string(const std::string& gen) const {
  if (!field_) return milnor::to_string(q_);
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < v_.size(); ++k) {
    if (v_[k] == 0) continue;
    Rational c = v_[k];
    bool neg = c < 0;
    if (neg) c = -c;
    if (!first || neg) os << (neg ? "-" : "+");
    first = false;
    if (k == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << gen;
      if (k > 1) os << "^" << k;
    }
  }
  std::string s = os.str();
  return needs_parens() ? "(" + s + ")" : s;
}

}  // namespace milnor
