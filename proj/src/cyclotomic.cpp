#include "twistkit/cyclotomic.hpp"

#include "twistkit/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace twistkit {

namespace {

std::atomic<std::int64_t> g_max_order{10000};

void check_order(std::int64_t n) {
  if (n < 1) throw InputError("cyclotomic order must be positive, got " + std::to_string(n));
  if (n > g_max_order.load()) {
    throw BoundError("cyclotomic order " + std::to_string(n) + " exceeds the configured bound " +
                     std::to_string(g_max_order.load()));
  }
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw InternalError("cyclotomic polynomial division left a remainder");
  }
  return quot;
}

// Reduces a dense polynomial in zeta_n modulo Phi_n. Exponents must be < 2n.
std::vector<Rational> reduce(std::vector<Rational> poly, std::int64_t n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0) continue;
    const Rational c = poly[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) poly[i - deg + j] -= c * phi[j];
    }
    poly[i] = 0;
  }
  poly.resize(deg);
  return poly;
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) out.push_back(k % n == 0 ? n : k);
  }
  if (n == 1) out = {1};
  return out;
}

}  // namespace

std::int64_t max_cyclotomic_order() { return g_max_order.load(); }
void set_max_cyclotomic_order(std::int64_t bound) { g_max_order.store(bound); }

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::int64_t lcm_order(std::int64_t a, std::int64_t b) {
  const std::int64_t l = std::lcm(a, b);
  check_order(l);
  return l;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;  // nodes are stable once inserted
  thread_local std::map<std::int64_t, const std::vector<std::int64_t>*> local;
  if (auto it = local.find(n); it != local.end()) return *it->second;
  check_order(n);
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) {
    local.emplace(n, &it->second);
    return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto it = cache.find(d);
    if (it == cache.end()) {
      // compute recursively without holding a reference across insertions
      std::vector<std::int64_t> sub(static_cast<std::size_t>(d) + 1, 0);
      sub[0] = -1;
      sub[static_cast<std::size_t>(d)] = 1;
      for (std::int64_t e = 1; e < d; ++e) {
        if (d % e == 0) sub = poly_div_exact(sub, cache.at(e));
      }
      it = cache.emplace(d, std::move(sub)).first;
    }
    num = poly_div_exact(num, it->second);
  }
  const auto& stored = cache.emplace(n, std::move(num)).first->second;
  local.emplace(n, &stored);
  return stored;
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(const Rational& r, std::int64_t order) : order_(order) {
  check_order(order);
  coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
  coeffs_[0] = r;
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t n, std::int64_t k) {
  const std::pair<Rational, std::int64_t> term{Rational(1), k};
  return from_terms(n, std::span(&term, 1));
}

Cyclotomic Cyclotomic::from_terms(std::int64_t n, std::span<const std::pair<Rational, std::int64_t>> terms) {
  check_order(n);
  std::vector<Rational> dense(static_cast<std::size_t>(n));
  for (const auto& [c, e] : terms) dense[static_cast<std::size_t>(mod(e, n))] += c;
  Cyclotomic out;
  out.order_ = n;
  out.coeffs_ = reduce(std::move(dense), n);
  return out;
}

Cyclotomic Cyclotomic::from_coeffs(std::int64_t n, std::vector<Rational> coeffs) {
  check_order(n);
  if (static_cast<std::int64_t>(coeffs.size()) != euler_phi(n)) {
    throw InputError("coefficient vector length must equal phi(" + std::to_string(n) + ")");
  }
  Cyclotomic out;
  out.order_ = n;
  out.coeffs_ = std::move(coeffs);
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw InputError("cyclotomic value " + to_string() + " is not rational");
  return coeffs_[0];
}

bool Cyclotomic::is_integer() const { return is_rational() && coeffs_[0].get_den() == 1; }

Cyclotomic Cyclotomic::lifted_to(std::int64_t m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) {
    throw InputError("cannot lift Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" + std::to_string(m) + ")");
  }
  check_order(m);
  const std::int64_t step = m / order_;
  std::vector<Rational> dense(static_cast<std::size_t>(m));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    dense[static_cast<std::size_t>(static_cast<std::int64_t>(j) * step)] = coeffs_[j];
  }
  Cyclotomic out;
  out.order_ = m;
  out.coeffs_ = reduce(std::move(dense), m);
  return out;
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  k = mod(k, order_);
  if (std::gcd(k, order_) != 1 && order_ != 1) {
    throw InputError("galois exponent " + std::to_string(k) + " is not a unit mod " + std::to_string(order_));
  }
  std::vector<Rational> dense(static_cast<std::size_t>(order_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    dense[static_cast<std::size_t>(mod(static_cast<std::int64_t>(j) * k, order_))] += coeffs_[j];
  }
  Cyclotomic out;
  out.order_ = order_;
  out.coeffs_ = reduce(std::move(dense), order_);
  return out;
}

Rational Cyclotomic::norm() const {
  Cyclotomic prod(Rational(1), order_);
  for (std::int64_t k : units_mod(order_)) prod *= galois(k);
  if (!prod.is_rational()) throw InternalError("norm of " + to_string() + " is not rational");
  return prod.coeffs_[0];
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_" + std::to_string(order_) + ")");
  Cyclotomic rest(Rational(1), order_);
  for (std::int64_t k : units_mod(order_)) {
    if (k % order_ != 1 % order_) rest *= galois(k);
  }
  Cyclotomic full = rest * *this;
  if (!full.is_rational()) throw InternalError("conjugate product is not rational");
  rest *= Rational(1) / full.coeffs_[0];
  return rest;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    const std::int64_t m = lcm_order(order_, o.order_);
    *this = lifted_to(m);
    return *this += o.lifted_to(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    const std::int64_t m = lcm_order(order_, o.order_);
    *this = lifted_to(m);
    return *this *= o.lifted_to(m);
  }
  const std::size_t d = coeffs_.size();
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(o.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = reduce(std::move(prod), order_);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const std::int64_t m = std::lcm(a.order_, b.order_);
  return a.lifted_to(m).coeffs_ == b.lifted_to(m).coeffs_;
}

std::vector<std::pair<Rational, std::int64_t>> Cyclotomic::terms() const {
  std::vector<std::pair<Rational, std::int64_t>> out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) != 0) out.emplace_back(coeffs_[j], static_cast<std::int64_t>(j));
  }
  return out;
}

std::string Cyclotomic::to_string() const {
  const auto ts = terms();
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, e] : ts) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'z' << order_;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::pair<double, double> Cyclotomic::approx() const {
  double re = 0, im = 0;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (const auto& [c, e] : terms()) {
    const double angle = two_pi * static_cast<double>(e) / static_cast<double>(order_);
    re += c.get_d() * std::cos(angle);
    im += c.get_d() * std::sin(angle);
  }
  return {re, im};
}

FieldOfValues field_of_values(std::span<const Cyclotomic> values) {
  FieldOfValues out;
  for (const auto& v : values) out.order = lcm_order(out.order, v.order());
  std::vector<Cyclotomic> lifted;
  lifted.reserve(values.size());
  for (const auto& v : values) lifted.push_back(v.lifted_to(out.order));

  const auto units = units_mod(out.order);
  for (std::int64_t k : units) {
    bool fixes = true;
    for (const auto& v : lifted) {
      if (!(v.galois(k) == v)) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.stabilizer.push_back(k);
  }
  out.rational = out.stabilizer.size() == units.size();
  // Q(i) cap Q(zeta_n) is the fixed field of {k : k = 1 mod gcd(n, 4)}.
  const std::int64_t g = std::gcd(out.order, std::int64_t{4});
  out.contained_in_gaussian = true;
  for (std::int64_t k : units) {
    if (mod(k, g) != 1 % g) continue;
    if (!std::binary_search(out.stabilizer.begin(), out.stabilizer.end(), k)) {
      out.contained_in_gaussian = false;
      break;
    }
  }
  return out;
}

}  // namespace twistkit
