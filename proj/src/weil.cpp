#include "twistkit/weil.hpp"

#include "twistkit/error.hpp"

#include <algorithm>
#include <sstream>

namespace twistkit {

void poly_trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPoly poly_negate_variable(const IntPoly& p) {
  IntPoly out = p;
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return out;
}

IntPoly poly_substitute_power(const IntPoly& p, unsigned k) {
  IntPoly out((p.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * k] = p[i];
  return out;
}

std::string poly_to_string(const IntPoly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    const Integer mag = abs(p[k]);
    if (first) {
      if (p[k] < 0) os << '-';
    } else {
      os << (p[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k > 0) {
      if (mag != 1) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return first ? "0" : os.str();
}

Integer integer_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(m[k], m[sel]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer resultant(const IntPoly& f_in, const IntPoly& g_in) {
  IntPoly f = f_in, g = g_in;
  poly_trim(f);
  poly_trim(g);
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    Integer r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= f[0];
    return r;
  }
  if (n == 0) {
    Integer r = 1;
    for (std::size_t i = 0; i < m; ++i) r *= g[0];
    return r;
  }
  const std::size_t size = m + n;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
  }
  return integer_determinant(std::move(s));
}

IntPoly resultant_with_power(const IntPoly& f_in, unsigned k) {
  if (k == 0) throw InputError("power must be positive");
  IntPoly f = f_in;
  poly_trim(f);
  const std::size_t d = f.size() - 1;
  // values at T = 0..d
  std::vector<Rational> xs, ys;
  for (std::size_t t = 0; t <= d; ++t) {
    IntPoly g(k + 1, 0);
    g[0] = -static_cast<long>(t);
    g[k] = 1;
    xs.emplace_back(static_cast<long>(t));
    ys.emplace_back(resultant(f, g));
  }
  // Newton divided differences, then expand to the monomial basis
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j <= d; ++j) {
    for (std::size_t i = d; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  std::vector<Rational> poly{dd[d]};
  for (std::size_t i = d; i-- > 0;) {
    // poly = poly * (T - x_i) + dd[i]
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t c = 0; c < poly.size(); ++c) {
      next[c + 1] += poly[c];
      next[c] -= poly[c] * xs[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  IntPoly out;
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) throw InternalError("resultant interpolation produced a non-integer coefficient");
    out.push_back(c.get_num());
  }
  poly_trim(out);
  return out;
}

void WeilPolynomial::validate(int g, const Integer& q, const IntPoly& c, bool weil_bound) {
  if (g < 0) throw InputError("dimension g must be non-negative");
  if (q < 1) throw InputError("q must be positive");
  if (c.size() != static_cast<std::size_t>(2 * g + 1)) {
    throw InputError("expected " + std::to_string(2 * g + 1) + " coefficients for g = " + std::to_string(g) + ", got " +
                     std::to_string(c.size()));
  }
  if (c[0] != 1) throw InputError("constant term must be 1");
  for (int k = 0; k <= g; ++k) {
    Integer qp = 1;
    for (int i = 0; i < g - k; ++i) qp *= q;
    if (c[static_cast<std::size_t>(2 * g - k)] != qp * c[static_cast<std::size_t>(k)]) {
      throw InputError("functional equation a_" + std::to_string(2 * g - k) + " = q^" + std::to_string(g - k) + " a_" +
                       std::to_string(k) + " fails");
    }
  }
  if (weil_bound && q > 1 && g > 0 && c[1] * c[1] > Integer(4 * g * g) * q) {
    throw InputError("a_1 violates the Weil bound |a_1| <= 2g sqrt(q)");
  }
}

WeilPolynomial::WeilPolynomial(int g, Integer q, IntPoly coeffs, bool check)
    : g_(g), q_(std::move(q)), coeffs_(std::move(coeffs)) {
  if (check) validate(g_, q_, coeffs_);
}

WeilPolynomial WeilPolynomial::negated() const {
  WeilPolynomial out = *this;
  out.coeffs_ = poly_negate_variable(coeffs_);
  return out;
}

std::string WeilPolynomial::to_string() const {
  return poly_to_string(coeffs_) + " (g=" + std::to_string(g_) + ", q=" + q_.get_str() + ")";
}

WeilPolynomial base_change(const WeilPolynomial& p, unsigned k) {
  if (k == 0) throw InputError("base change degree must be positive");
  if (k == 1) return p;
  IntPoly reciprocal(p.coeffs().rbegin(), p.coeffs().rend());
  IntPoly r = resultant_with_power(reciprocal, k);
  r.resize(p.coeffs().size(), 0);
  IntPoly out(r.rbegin(), r.rend());
  const Integer lead = out[0];
  if (lead != 1 && lead != -1) throw InternalError("base change resultant has non-unit constant term " + lead.get_str());
  if (lead == -1) {
    for (auto& c : out) c = -c;
  }
  Integer qk = 1;
  for (unsigned i = 0; i < k; ++i) qk *= p.q();
  try {
    WeilPolynomial::validate(p.g(), qk, out, false);
  } catch (const InputError& e) {
    throw InternalError(std::string("base change lost the functional equation: ") + e.what());
  }
  return WeilPolynomial(p.g(), qk, std::move(out), false);
}

TwistClassification classify_pair(const WeilPolynomial& p, const WeilPolynomial& p2) {
  if (p.g() != p2.g() || p.q() != p2.q()) throw InputError("classify: polynomials have different (g, q)");
  TwistClassification out;
  out.first = p;
  out.second = p2;
  out.isogenous = p == p2;
  if (out.isogenous) {
    out.sign = 1;
  } else if (p.negated() == p2) {
    out.sign = -1;
  }
  out.quadratic_twist = out.sign.has_value();
  out.polyquadratic_twist = base_change(p, 2) == base_change(p2, 2);
  return out;
}

TraceZeroCheck trace_zero_check(const WeilPolynomial& p, const WeilPolynomial& p2) {
  if (p.g() != 2 || p2.g() != 2) throw InputError("trace-zero check applies to g = 2");
  const auto cls = classify_pair(p, p2);
  TraceZeroCheck out;
  out.hypothesis = cls.polyquadratic_twist && p[1] == 0 && p2[1] == 0;
  out.conclusion = cls.quadratic_twist;
  return out;
}

IntPoly phi_map(const IntPoly& p) { return resultant_with_power(p, 2); }

std::size_t PhiReport::match_count() const {
  return static_cast<std::size_t>(std::count(matches_printed.begin(), matches_printed.end(), true));
}

PhiReport supersingular_phi() {
  const IntPoly one_minus_t2{1, 0, -1}, one_plus_t2{1, 0, 1};
  const IntPoly one_minus_t{1, -1}, one_plus_t{1, 1};
  const IntPoly cyc6{1, -1, 1}, cyc3{1, 1, 1};
  PhiReport r;
  r.domain = {poly_mul(one_minus_t2, one_minus_t2), IntPoly{1, 0, -1, 0, 1}, IntPoly{1, 0, 0, 0, 1},
              IntPoly{1, 0, 1, 0, 1}, poly_mul(one_plus_t2, one_plus_t2)};
  const IntPoly omt2 = poly_mul(one_minus_t, one_minus_t), opt2 = poly_mul(one_plus_t, one_plus_t);
  r.printed = {poly_mul(omt2, omt2), poly_mul(cyc6, cyc6), poly_mul(one_minus_t2, one_minus_t2), poly_mul(cyc3, cyc3),
               poly_mul(opt2, opt2)};
  r.agrees_with_base_change = true;
  for (std::size_t i = 0; i < r.domain.size(); ++i) {
    IntPoly img = phi_map(r.domain[i]);
    img.resize(5, 0);
    r.matches_printed.push_back(img == r.printed[i]);
    const WeilPolynomial normalized(2, 1, r.domain[i]);
    if (!(base_change(normalized, 2).coeffs() == img)) r.agrees_with_base_change = false;
    r.images.push_back(std::move(img));
  }
  r.pairwise_distinct = true;
  for (std::size_t i = 0; i < r.images.size(); ++i) {
    for (std::size_t j = i + 1; j < r.images.size(); ++j) {
      if (r.images[i] == r.images[j]) r.pairwise_distinct = false;
    }
  }
  return r;
}

WeilPolynomial parse_weil_line(const std::string& line) {
  std::istringstream is(line);
  int g = 0;
  std::string qs;
  if (!(is >> g >> qs)) throw InputError("expected `g q a_0 ... a_2g`, got '" + line + "'");
  Integer q;
  if (q.set_str(qs, 10) != 0) throw InputError("bad q '" + qs + "'");
  IntPoly c;
  std::string tok;
  while (is >> tok) {
    Integer v;
    if (v.set_str(tok, 10) != 0) throw InputError("bad coefficient '" + tok + "'");
    c.push_back(v);
  }
  return WeilPolynomial(g, q, std::move(c));
}

namespace {

Integer decode_base26(const std::string& s) {
  if (s.empty()) throw InputError("empty LMFDB coefficient");
  bool negative = s.size() > 1 && s[0] == 'a';
  Integer v = 0;
  for (std::size_t i = negative ? 1 : 0; i < s.size(); ++i) {
    if (s[i] < 'a' || s[i] > 'z') throw InputError("bad LMFDB coefficient '" + s + "'");
    v = v * 26 + (s[i] - 'a');
  }
  return negative ? Integer(-v) : v;
}

std::string encode_base26(Integer v) {
  const bool negative = v < 0;
  if (negative) v = -v;
  std::string digits;
  do {
    const Integer r = v % 26;
    digits.push_back(static_cast<char>('a' + r.get_si()));
    v /= 26;
  } while (v > 0);
  std::reverse(digits.begin(), digits.end());
  return negative ? "a" + digits : digits;
}

}  // namespace

WeilPolynomial parse_lmfdb_label(const std::string& label) {
  const auto d1 = label.find('.');
  const auto d2 = label.find('.', d1 == std::string::npos ? d1 : d1 + 1);
  if (d1 == std::string::npos || d2 == std::string::npos) throw InputError("bad LMFDB label '" + label + "'");
  int g = 0;
  Integer q;
  try {
    g = std::stoi(label.substr(0, d1));
  } catch (const std::exception&) {
    throw InputError("bad LMFDB label '" + label + "'");
  }
  if (q.set_str(label.substr(d1 + 1, d2 - d1 - 1), 10) != 0) throw InputError("bad q in LMFDB label '" + label + "'");
  std::vector<Integer> head{1};
  std::string rest = label.substr(d2 + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const auto us = rest.find('_', pos);
    head.push_back(decode_base26(rest.substr(pos, us == std::string::npos ? std::string::npos : us - pos)));
    if (us == std::string::npos) break;
    pos = us + 1;
  }
  if (head.size() != static_cast<std::size_t>(g + 1)) {
    throw InputError("LMFDB label '" + label + "' should list " + std::to_string(g) + " coefficients");
  }
  IntPoly c(static_cast<std::size_t>(2 * g + 1));
  for (int k = 0; k <= g; ++k) {
    c[static_cast<std::size_t>(k)] = head[static_cast<std::size_t>(k)];
    Integer qp = 1;
    for (int i = 0; i < g - k; ++i) qp *= q;
    c[static_cast<std::size_t>(2 * g - k)] = qp * head[static_cast<std::size_t>(k)];
  }
  return WeilPolynomial(g, q, std::move(c));
}

std::string lmfdb_label(const WeilPolynomial& p) {
  std::string s = std::to_string(p.g()) + "." + p.q().get_str() + ".";
  for (int k = 1; k <= p.g(); ++k) {
    if (k > 1) s += '_';
    s += encode_base26(p[static_cast<std::size_t>(k)]);
  }
  return s;
}

}  // namespace twistkit
