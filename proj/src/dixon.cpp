// Character tables by Dixon's method: simultaneous eigenvectors of the class
// multiplication matrices over F_p (p = 1 mod exponent, p > 2 sqrt|G|), then an
// exact lift of each character value from its eigenvalue multiplicities.

#include "twistkit/chartab.hpp"
#include "twistkit/error.hpp"

#include <algorithm>
#include <cmath>

namespace twistkit {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 from(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p);
    return static_cast<u64>(((v % m) + m) % m);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& rows, const Field& F) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const u64 iv = F.inv(rows[r][col]);
    for (auto& x : rows[r]) x = F.mul(x, iv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const u64 f = rows[i][col];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of the null space of a square matrix, as rows.
Mat null_space(Mat a, const Field& F) {
  const std::size_t n = a.size();
  const auto pivots = rref(a, F);
  Mat out;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.sub(0, a[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial det(xI - A), low degree first, via Faddeev-LeVerrier.
Vec charpoly(const Mat& a, const Field& F) {
  const std::size_t n = a.size();
  Vec c(n + 1, 0);
  c[n] = 1;
  Mat m(n, Vec(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        u64 s = 0;
        for (std::size_t l = 0; l < n; ++l) s = F.add(s, F.mul(a[i][l], m[l][j]));
        next[i][j] = s;
      }
      next[i][i] = F.add(next[i][i], c[n - k + 1]);
    }
    m = std::move(next);
    u64 tr = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) tr = F.add(tr, F.mul(a[i][l], m[l][i]));
    }
    c[n - k] = F.sub(0, F.mul(tr, F.inv(k % F.p)));
  }
  return c;
}

struct Subspace {
  Mat basis;  // rows, RREF
  std::vector<std::size_t> pivots;
};

}  // namespace

TablePtr character_table(const GroupPtr& group) {
  const auto& G = *group;
  const std::size_t n = G.order();
  const std::size_t k = G.num_classes();
  const auto e = static_cast<u64>(G.exponent());

  u64 p = e + 1;
  const auto lower = static_cast<u64>(2.0 * std::sqrt(static_cast<double>(n))) + 1;
  while (p <= lower || !is_prime(p)) p += e;
  const Field F{p};

  // a[i][j][l] = #{x in C_i : x^{-1} z_l in C_j}; M_i[j][l] = a[i][j][l]
  std::vector<Mat> classmat(k, Mat(k, Vec(k, 0)));
  for (std::size_t l = 0; l < k; ++l) {
    const std::size_t z = G.classes()[l].representative;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t y = G.multiply(G.inverse(x), z);
      auto& cell = classmat[G.class_of(x)][G.class_of(y)][l];
      cell = F.add(cell, 1);
    }
  }

  Mat identity(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;
  std::vector<Subspace> spaces;
  {
    Subspace full{identity, {}};
    full.pivots = rref(full.basis, F);
    spaces.push_back(std::move(full));
  }

  for (std::size_t ci = 1; ci < k; ++ci) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; })) break;
    const Mat& M = classmat[ci];
    std::vector<Subspace> next;
    for (auto& sp : spaces) {
      const std::size_t d = sp.basis.size();
      if (d == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      // restriction: M b_r = sum_s A[s][r] b_s, read off at pivot columns
      Mat A(d, Vec(d, 0));
      for (std::size_t r = 0; r < d; ++r) {
        Vec img(k, 0);
        for (std::size_t j = 0; j < k; ++j) {
          u64 s = 0;
          for (std::size_t l = 0; l < k; ++l) s = F.add(s, F.mul(M[j][l], sp.basis[r][l]));
          img[j] = s;
        }
        for (std::size_t s = 0; s < d; ++s) A[s][r] = img[sp.pivots[s]];
      }
      const Vec cp = charpoly(A, F);
      std::size_t covered = 0;
      for (u64 lambda = 0; lambda < p; ++lambda) {
        u64 val = 0;
        for (std::size_t t = cp.size(); t-- > 0;) val = F.add(F.mul(val, lambda), cp[t]);
        if (val != 0) continue;
        Mat shifted = A;
        for (std::size_t s = 0; s < d; ++s) shifted[s][s] = F.sub(shifted[s][s], lambda);
        const Mat coords = null_space(shifted, F);
        Subspace eig;
        for (const auto& cvec : coords) {
          Vec v(k, 0);
          for (std::size_t s = 0; s < d; ++s) {
            if (cvec[s] == 0) continue;
            for (std::size_t l = 0; l < k; ++l) v[l] = F.add(v[l], F.mul(cvec[s], sp.basis[s][l]));
          }
          eig.basis.push_back(std::move(v));
        }
        eig.pivots = rref(eig.basis, F);
        covered += eig.basis.size();
        next.push_back(std::move(eig));
      }
      if (covered != d) {
        throw InternalError("class matrix is not diagonalizable mod " + std::to_string(p) + " for group '" + G.name() +
                            "'");
      }
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) {
    throw InternalError("Dixon splitting produced " + std::to_string(spaces.size()) + " eigenspaces for " +
                        std::to_string(k) + " classes");
  }

  // primitive e-th root of unity mod p
  u64 z = 0;
  const auto ef = prime_factors(e);
  for (u64 a = 2; a < p && z == 0; ++a) {
    const u64 cand = F.pow(a, (p - 1) / e);
    bool primitive = true;
    for (u64 q : ef) {
      if (F.pow(cand, e / q) == 1) primitive = false;
    }
    if (primitive) z = cand;
  }
  if (e == 1) z = 1;
  if (z == 0) throw InternalError("no primitive root of unity mod " + std::to_string(p));

  std::vector<ClassFunction> irr;
  const auto max_deg = static_cast<u64>(std::sqrt(static_cast<double>(n)) + 1e-9);
  for (const auto& sp : spaces) {
    Vec w = sp.basis[0];
    if (w[0] == 0) throw InternalError("central character vanishes at the identity class");
    const u64 iw0 = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, iw0);
    // sum_l w_l w_{l*} / |C_l| = |G| / deg^2
    u64 s = 0;
    for (std::size_t l = 0; l < k; ++l) {
      s = F.add(s, F.mul(F.mul(w[l], w[G.inverse_class(l)]), F.inv(F.from(static_cast<std::int64_t>(G.class_size(l))))));
    }
    const u64 target = F.mul(F.from(static_cast<std::int64_t>(n)), F.inv(s));
    u64 deg = 0;
    for (u64 d = 1; d <= max_deg; ++d) {
      if (F.mul(d, d) == target) {
        deg = d;
        break;
      }
    }
    if (deg == 0) throw InternalError("no degree matches the central character mod " + std::to_string(p));
    Vec chi(k);
    for (std::size_t l = 0; l < k; ++l) {
      chi[l] = F.mul(F.mul(deg, w[l]), F.inv(F.from(static_cast<std::int64_t>(G.class_size(l)))));
    }

    std::vector<Cyclotomic> values;
    values.reserve(k);
    for (std::size_t l = 0; l < k; ++l) {
      const u64 o = G.class_element_order(l);
      const u64 zo = F.pow(z, e / o);
      const u64 inv_o = F.inv(o % p);
      std::vector<std::pair<Rational, std::int64_t>> terms;
      u64 total = 0;
      for (u64 j = 0; j < o; ++j) {
        u64 m = 0;
        for (u64 t = 0; t < o; ++t) {
          const u64 root = F.pow(zo, (o - (j * t) % o) % o);
          m = F.add(m, F.mul(chi[G.power_class(l, static_cast<std::int64_t>(t))], root));
        }
        m = F.mul(m, inv_o);
        if (m > deg) throw InternalError("eigenvalue multiplicity out of range while lifting a character value");
        total += m;
        if (m != 0) terms.emplace_back(Rational(static_cast<long>(m)), static_cast<std::int64_t>(j * (e / o)));
      }
      if (total != deg) throw InternalError("eigenvalue multiplicities do not sum to the degree");
      values.push_back(Cyclotomic::from_terms(static_cast<std::int64_t>(e), terms));
    }
    irr.emplace_back(group, std::move(values), true);
  }

  // trivial first, then by degree and coefficient order
  auto key_less = [](const ClassFunction& a, const ClassFunction& b) {
    const Integer da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t c = 0; c < a.size(); ++c) {
      const auto& ca = a.values[c].coeffs();
      const auto& cb = b.values[c].coeffs();
      for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] != cb[i]) return ca[i] > cb[i];
      }
    }
    return false;
  };
  std::sort(irr.begin(), irr.end(), key_less);
  const ClassFunction triv = trivial_character(group);
  std::stable_partition(irr.begin(), irr.end(), [&](const ClassFunction& f) { return f == triv; });

  auto table = std::make_shared<CharacterTable>(group, std::move(irr));
  verify_character_table(*table);
  return table;
}

}  // namespace twistkit
