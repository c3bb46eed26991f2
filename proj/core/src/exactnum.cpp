#include "surftrace/exactnum.hpp"

#include <sstream>

#include "json.hpp"
#include "surftrace/errors.hpp"

namespace surftrace {

std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    Rat r(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    if (r.get_den() == 0) throw DomainError("zero denominator in rational '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational '" + s + "'");
  }
}

// ---------------------------------------------------------------- PolyN

PolyN::PolyN(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
PolyN::PolyN(const Rat& c) {
  if (c != 0) c_.push_back(c);
}
PolyN::PolyN(long c) {
  if (c != 0) c_.push_back(Rat(c));
}

PolyN PolyN::var() { return monomial(1); }

PolyN PolyN::monomial(int degree, const Rat& c) {
  if (c == 0) return PolyN();
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return PolyN(std::move(v));
}

PolyN PolyN::from_linear_factors(const std::vector<long>& shifts) {
  PolyN p(1L);
  for (long s : shifts) p *= PolyN(std::vector<Rat>{Rat(s), Rat(1)});
  return p;
}

void PolyN::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat PolyN::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

Rat PolyN::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyN PolyN::monic() const {
  if (is_zero()) return *this;
  PolyN r = *this;
  Rat inv = 1 / lead();
  for (auto& c : r.c_) c *= inv;
  return r;
}

PolyN PolyN::derivative() const {
  if (c_.size() <= 1) return PolyN();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return PolyN(std::move(d));
}

PolyN& PolyN::operator+=(const PolyN& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyN& PolyN::operator-=(const PolyN& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyN operator*(const PolyN& a, const PolyN& b) {
  if (a.is_zero() || b.is_zero()) return PolyN();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyN(std::move(r));
}

PolyN& PolyN::operator*=(const PolyN& o) { return *this = *this * o; }

PolyN& PolyN::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

PolyN PolyN::operator-() const {
  PolyN r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyN PolyN::pow(unsigned e) const {
  PolyN result(1L), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

std::string PolyN::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (!unit || i == 0) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "n";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<PolyN, PolyN> divmod(const PolyN& a, const PolyN& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyN(), a};
  std::vector<Rat> rem = a.coeffs();
  const auto& bc = b.coeffs();
  int db = b.degree();
  std::vector<Rat> q(a.degree() - db + 1);
  Rat inv = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rat f = rem[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * bc[j];
  }
  rem.resize(db);
  return {PolyN(std::move(q)), PolyN(std::move(rem))};
}

PolyN gcd(const PolyN& a, const PolyN& b) {
  PolyN x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    PolyN r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

PolyN lcm(const PolyN& a, const PolyN& b) {
  if (a.is_zero() || b.is_zero()) return PolyN();
  return (exact_div(a, gcd(a, b)) * b).monic();
}

PolyN exact_div(const PolyN& a, const PolyN& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("exact_div: non-zero remainder");
  return q;
}

PolyN poly_interpolate(const std::vector<std::pair<long, Rat>>& points, int degree_bound) {
  if (degree_bound < 0) throw DomainError("poly_interpolate: negative degree bound");
  size_t need = static_cast<size_t>(degree_bound) + 1;
  if (points.size() < need) throw DomainError("poly_interpolate: too few points");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw DomainError("poly_interpolate: repeated abscissa");
  // Newton divided differences on the first `need` points.
  std::vector<Rat> dd(need);
  for (size_t i = 0; i < need; ++i) dd[i] = points[i].second;
  for (size_t lvl = 1; lvl < need; ++lvl)
    for (size_t i = need - 1; i >= lvl; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i].first - points[i - lvl].first);
      if (i == lvl) break;
    }
  PolyN p;
  PolyN basis(1L);
  for (size_t i = 0; i < need; ++i) {
    p += basis * dd[i];
    basis *= PolyN(std::vector<Rat>{Rat(-points[i].first), Rat(1)});
  }
  for (size_t i = need; i < points.size(); ++i)
    if (p.eval(Rat(points[i].first)) != points[i].second)
      throw DomainError("interpolation mismatch at n=" + std::to_string(points[i].first));
  return p;
}

// ---------------------------------------------------------------- RatFuncN

RatFuncN::RatFuncN(PolyN num, PolyN den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFuncN::normalize() {
  if (num_.is_zero()) {
    den_ = PolyN(1L);
    return;
  }
  if (den_.degree() > 0) {
    PolyN g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Rat l = den_.lead();
  if (l != 1) {
    Rat inv = 1 / l;
    num_ *= inv;
    den_ *= inv;
  }
}

int RatFuncN::degree() const {
  if (num_.is_zero()) return kDegNegInf;
  return num_.degree() - den_.degree();
}

Rat RatFuncN::eval(long n0) const {
  Rat d = den_.eval(Rat(n0));
  if (d == 0) throw DomainError("pole at n=" + std::to_string(n0));
  return num_.eval(Rat(n0)) / d;
}

RatFuncN& RatFuncN::operator+=(const RatFuncN& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFuncN& RatFuncN::operator-=(const RatFuncN& o) { return *this += -o; }

RatFuncN& RatFuncN::operator*=(const RatFuncN& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFuncN();
  // Cross-cancel before multiplying so the result is already reduced.
  PolyN g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  PolyN a = g1.degree() > 0 ? exact_div(num_, g1) : num_;
  PolyN d = g1.degree() > 0 ? exact_div(o.den_, g1) : o.den_;
  PolyN c = g2.degree() > 0 ? exact_div(o.num_, g2) : o.num_;
  PolyN b = g2.degree() > 0 ? exact_div(den_, g2) : den_;
  num_ = a * c;
  den_ = b * d;
  Rat l = den_.lead();
  if (l != 1) {
    Rat inv = 1 / l;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFuncN& RatFuncN::operator/=(const RatFuncN& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  RatFuncN inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  Rat l = inv.den_.lead();
  inv.num_ *= 1 / l;
  inv.den_ *= 1 / l;
  return *this *= inv;
}

RatFuncN RatFuncN::operator-() const {
  RatFuncN r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFuncN RatFuncN::pow(int e) const {
  if (e < 0) return RatFuncN(1L) / pow(-e);
  RatFuncN r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  if (r.num_.is_zero()) r.den_ = PolyN(1L);
  return r;
}

std::string RatFuncN::to_string() const {
  if (den_ == PolyN(1L)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFuncN ratfunc_arith(const RatFuncN& a, const RatFuncN& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw DomainError("unknown arithmetic op");
}

CommonDenominator common_denominator(const std::vector<RatFuncN>& fs) {
  CommonDenominator out;
  out.den = PolyN(1L);
  for (const auto& f : fs) out.den = lcm(out.den, f.den());
  out.nums.reserve(fs.size());
  for (const auto& f : fs) out.nums.push_back(f.num() * exact_div(out.den, f.den()));
  return out;
}

std::string ratfunc_to_json(const RatFuncN& f) {
  nlohmann::json j;
  j["num"] = nlohmann::json::array();
  j["den"] = nlohmann::json::array();
  for (const auto& c : f.num().coeffs()) j["num"].push_back(rat_to_string(c));
  for (const auto& c : f.den().coeffs()) j["den"].push_back(rat_to_string(c));
  return j.dump();
}

RatFuncN ratfunc_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed RatFuncN JSON: ") + e.what());
  }
  auto read = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw DomainError(std::string("missing field ") + key);
    std::vector<Rat> cs;
    for (const auto& c : j[key]) {
      if (!c.is_string()) throw DomainError("RatFuncN coefficients must be strings");
      cs.push_back(rat_from_string(c.get<std::string>()));
    }
    return PolyN(std::move(cs));
  };
  return RatFuncN(read("num"), read("den"));
}

std::string degree_to_string(int d) { return d == kDegNegInf ? "-inf" : std::to_string(d); }

}  // namespace surftrace
