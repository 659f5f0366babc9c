#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "uvd/linform.hpp"
#include "uvd/qrational.hpp"
#include "uvd/rational.hpp"

namespace uvd {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

inline Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
  }
  throw std::invalid_argument(std::string("unknown family letter: ") + c);
}

struct AlgebraId {
  Family fam;
  int rank;

  std::string name() const {
    return std::string(1, family_letter(fam)) + std::to_string(rank);
  }
};

using Vec = std::vector<Rat>;

namespace detail {

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_scale(const Vec& a, const Rat& s) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

inline Rat vec_dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Exact determinant by fraction-free-ish Gaussian elimination on mpq.
inline Rat det(std::vector<Vec> m) {
  size_t n = m.size();
  Rat d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    Rat inv = 1 / m[c][c];
    for (size_t r2 = c + 1; r2 < n; ++r2) {
      if (m[r2][c] == 0) continue;
      Rat f = m[r2][c] * inv;
      for (size_t k = c; k < n; ++k) m[r2][k] -= f * m[c][k];
    }
  }
  return d;
}

// Solves M x = rhs exactly (square, invertible).
inline std::vector<Rat> solve(std::vector<Vec> m, std::vector<Rat> rhs) {
  size_t n = m.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular system");
    std::swap(m[piv], m[c]);
    std::swap(rhs[piv], rhs[c]);
    Rat inv = 1 / m[c][c];
    for (size_t k = c; k < n; ++k) m[c][k] *= inv;
    rhs[c] *= inv;
    for (size_t r2 = 0; r2 < n; ++r2) {
      if (r2 == c || m[r2][c] == 0) continue;
      Rat f = m[r2][c];
      for (size_t k = c; k < n; ++k) m[r2][k] -= f * m[c][k];
      rhs[r2] -= f * rhs[c];
    }
  }
  return rhs;
}

}  // namespace detail

// Root system in an exact-rational ambient orthogonal basis. Simple roots are
// indexed in the source's numeration: classical families as usual; for the
// E series the chain is numbered 1..rank-1 starting from the shorter wing and
// the branch node is last (see docs/weights.md for the dictionary to the
// Bourbaki tables used to build the coordinates).
class RootSystem {
 public:
  AlgebraId id;
  int rank = 0;
  int ambient = 0;
  Rat scalar_norm = 1;  // (u,v) = scalar_norm * dot(u,v)
  std::vector<Vec> simple;
  std::vector<Vec> positive;
  std::vector<Vec> omega;  // fundamental weights, same numeration as simple
  Vec rho;
  Rat long_sq;    // squared length of a long root under (.,.)
  long h_dual = 0;

  Rat ip(const Vec& u, const Vec& v) const {
    return scalar_norm * detail::vec_dot(u, v);
  }

  Vec coroot(const Vec& a) const {
    return detail::vec_scale(a, Rat(2) / ip(a, a));
  }

  // lambda = sum coeffs[i] * omega[i] (coeffs may be shorter than rank)
  Vec weight(const std::vector<Rat>& coeffs) const {
    Vec w(ambient, Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i)
      w = detail::vec_add(w, detail::vec_scale(omega[i], coeffs[i]));
    return w;
  }
  Vec weight_l(const std::vector<long>& coeffs) const {
    std::vector<Rat> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i];
    return weight(c);
  }

  long dim() const { return rank + 2 * static_cast<long>(positive.size()); }

  Rat casimir(const Vec& lam) const {
    return ip(lam, lam) + 2 * ip(lam, rho);
  }
};

namespace detail {

inline std::vector<Vec> simple_roots_ambient(AlgebraId id, int& ambient) {
  const int n = id.rank;
  std::vector<Vec> s;
  auto e = [&](int i) {
    Vec v(ambient, Rat(0));
    v[i] = 1;
    return v;
  };
  switch (id.fam) {
    case Family::A: {
      ambient = n + 1;
      for (int i = 0; i < n; ++i) {
        Vec v(ambient, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      break;
    }
    case Family::B: {
      if (n < 2) throw std::invalid_argument("B rank >= 2");
      ambient = n;
      for (int i = 0; i + 1 < n; ++i) {
        Vec v(ambient, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      s.push_back(e(n - 1));
      break;
    }
    case Family::C: {
      if (n < 2) throw std::invalid_argument("C rank >= 2");
      ambient = n;
      for (int i = 0; i + 1 < n; ++i) {
        Vec v(ambient, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      Vec v(ambient, Rat(0));
      v[n - 1] = 2;
      s.push_back(v);
      break;
    }
    case Family::D: {
      if (n < 3) throw std::invalid_argument("D rank >= 3");
      ambient = n;
      for (int i = 0; i + 1 < n; ++i) {
        Vec v(ambient, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      Vec v(ambient, Rat(0));
      v[n - 2] = 1;
      v[n - 1] = 1;
      s.push_back(v);
      break;
    }
    case Family::G: {
      if (n != 2) throw std::invalid_argument("G rank 2");
      ambient = 3;
      {
        Vec v(ambient, Rat(0));
        v[0] = 1;
        v[1] = -1;
        s.push_back(v);  // short
      }
      {
        Vec v(ambient, Rat(0));
        v[0] = -2;
        v[1] = 1;
        v[2] = 1;
        s.push_back(v);  // long
      }
      break;
    }
    case Family::F: {
      if (n != 4) throw std::invalid_argument("F rank 4");
      ambient = 4;
      {
        Vec v(ambient, Rat(0));
        v[1] = 1;
        v[2] = -1;
        s.push_back(v);
      }
      {
        Vec v(ambient, Rat(0));
        v[2] = 1;
        v[3] = -1;
        s.push_back(v);
      }
      s.push_back(e(3));
      {
        Vec v(ambient, Rat(0));
        v[0] = Rat(1, 2);
        v[1] = Rat(-1, 2);
        v[2] = Rat(-1, 2);
        v[3] = Rat(-1, 2);
        s.push_back(v);
      }
      break;
    }
    case Family::E: {
      if (n < 6 || n > 8) throw std::invalid_argument("E rank 6..8");
      ambient = 8;
      // Bourbaki simple roots of E8 in R^8
      std::vector<Vec> b(9, Vec(ambient, Rat(0)));
      b[1][0] = Rat(1, 2);
      b[1][7] = Rat(1, 2);
      for (int i = 1; i <= 6; ++i) b[1][i] = Rat(-1, 2);
      b[2][0] = 1;
      b[2][1] = 1;
      b[3][0] = -1;
      b[3][1] = 1;
      for (int k = 4; k <= 8; ++k) {
        b[k][k - 3] = -1;
        b[k][k - 2] = 1;
      }
      // chain-first numeration: node 1 = Bourbaki 1, nodes 2..n-1 =
      // Bourbaki 3..n, branch node n = Bourbaki 2
      s.push_back(b[1]);
      for (int j = 2; j <= n - 1; ++j) s.push_back(b[j + 1]);
      s.push_back(b[2]);
      break;
    }
  }
  return s;
}

}  // namespace detail

// Builds the full system with (long root, long root) = normalization.
inline RootSystem build_root_system(AlgebraId id, const Rat& normalization = 2) {
  RootSystem rs;
  rs.id = id;
  rs.rank = id.rank;
  rs.simple = detail::simple_roots_ambient(id, rs.ambient);

  // raw squared length of a long root in plain dot coordinates
  Rat raw_long = 0;
  for (const auto& a : rs.simple)
    raw_long = std::max(raw_long, detail::vec_dot(a, a));
  rs.scalar_norm = normalization / raw_long;
  rs.long_sq = normalization;

  // positive roots: closure by root strings, processed by height
  std::map<Vec, int> height;  // coordinates -> height
  std::set<Vec> known;
  std::vector<Vec> frontier;
  for (const auto& a : rs.simple) {
    known.insert(a);
    height[a] = 1;
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& mu : frontier) {
      for (int i = 0; i < rs.rank; ++i) {
        const Vec& ai = rs.simple[i];
        // p = max k with mu - k*ai a (positive) root
        int p = 0;
        Vec down = detail::vec_sub(mu, ai);
        while (known.count(down)) {
          ++p;
          down = detail::vec_sub(down, ai);
        }
        Rat pairing = 2 * rs.ip(mu, ai) / rs.ip(ai, ai);
        if (Rat(p) - pairing > 0) {
          Vec up = detail::vec_add(mu, ai);
          if (!known.count(up)) {
            known.insert(up);
            height[up] = height[mu] + 1;
            next.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  rs.positive.assign(known.begin(), known.end());
  std::sort(rs.positive.begin(), rs.positive.end(),
            [&](const Vec& u, const Vec& v) {
              if (height[u] != height[v]) return height[u] < height[v];
              return u < v;
            });

  // fundamental weights: solve (omega_i, alpha_j^vee) = delta_ij inside the
  // simple-root span, omega_i = sum_k c_k alpha_k
  {
    std::vector<Vec> m(rs.rank, Vec(rs.rank));
    for (int j = 0; j < rs.rank; ++j) {
      Rat aj2 = rs.ip(rs.simple[j], rs.simple[j]);
      for (int k = 0; k < rs.rank; ++k)
        m[j][k] = 2 * rs.ip(rs.simple[k], rs.simple[j]) / aj2;
    }
    for (int i = 0; i < rs.rank; ++i) {
      std::vector<Rat> rhs(rs.rank, Rat(0));
      rhs[i] = 1;
      auto c = detail::solve(m, rhs);
      Vec w(rs.ambient, Rat(0));
      for (int k = 0; k < rs.rank; ++k)
        w = detail::vec_add(w, detail::vec_scale(rs.simple[k], c[k]));
      rs.omega.push_back(w);
    }
  }

  rs.rho = Vec(rs.ambient, Rat(0));
  for (const auto& w : rs.omega) rs.rho = detail::vec_add(rs.rho, w);

  // h^vee = 1 + (rho, theta^vee), theta = highest root (maximal height, long)
  {
    const Vec& theta = rs.positive.back();
    Rat hv = 1 + 2 * rs.ip(rs.rho, theta) / rs.ip(theta, theta);
    rs.h_dual = to_long(hv);
  }
  return rs;
}

// Histogram of heights (rho, mu) over positive roots mu with (lam, mu) == s.
inline std::map<Rat, long> heights_histogram(const RootSystem& rs,
                                             const Vec& lam, const Rat& s) {
  std::map<Rat, long> h;
  for (const auto& mu : rs.positive)
    if (rs.ip(lam, mu) == s) h[rs.ip(rs.rho, mu)] += 1;
  return h;
}

// Weyl quantum dimension: prod over mu>0 of
// sinh(x/2 (mu, lam+rho)) / sinh(x/2 (mu, rho)).
inline QRational weyl_qdim(const RootSystem& rs, const Vec& lam) {
  std::vector<Rat> nums, dens;
  Vec lr = detail::vec_add(lam, rs.rho);
  for (const auto& mu : rs.positive) {
    nums.push_back(rs.ip(mu, lr) / 2);
    dens.push_back(rs.ip(mu, rs.rho) / 2);
  }
  // cancel multiset intersection exactly to keep polynomials short
  std::sort(nums.begin(), nums.end());
  std::sort(dens.begin(), dens.end());
  std::vector<Rat> n2, d2;
  {
    auto i = nums.begin();
    auto j = dens.begin();
    while (i != nums.end() && j != dens.end()) {
      if (*i == *j) {
        ++i;
        ++j;
      } else if (*i < *j) {
        n2.push_back(*i++);
      } else {
        d2.push_back(*j++);
      }
    }
    n2.insert(n2.end(), i, nums.end());
    d2.insert(d2.end(), j, dens.end());
  }
  Rat sign = 1;
  QRational r = QRational::constant(1);
  for (auto& v : n2) {
    if (v == 0) return QRational();
    if (v < 0) {
      sign = -sign;
      v = -v;
    }
    r = r * QRational::q_binomial(v);
  }
  for (auto& v : d2) {
    if (v == 0) throw QRationalError("vanishing Weyl denominator factor");
    if (v < 0) {
      sign = -sign;
      v = -v;
    }
    r = r / QRational::q_binomial(v);
  }
  return r.scaled(sign);
}

// Gram determinant of simple coroots.
inline Rat coroot_gram_det(const RootSystem& rs) {
  std::vector<Vec> g(rs.rank, Vec(rs.rank));
  for (int i = 0; i < rs.rank; ++i) {
    Vec ci = rs.coroot(rs.simple[i]);
    for (int j = 0; j < rs.rank; ++j)
      g[i][j] = rs.ip(ci, rs.coroot(rs.simple[j]));
  }
  return detail::det(g);
}

// JSON snapshot used by golden tests.
inline nlohmann::ordered_json root_system_json(const RootSystem& rs) {
  nlohmann::ordered_json j;
  j["algebra"] = rs.id.name();
  j["rank"] = rs.rank;
  j["long_root_sq"] = rat_str(rs.long_sq);
  j["n_positive_roots"] = rs.positive.size();
  j["dim"] = rs.dim();
  j["h_dual"] = rs.h_dual;
  j["coroot_gram_det"] = rat_str(coroot_gram_det(rs));
  auto vec_json = [](const Vec& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
  };
  j["simple_roots"] = nlohmann::ordered_json::array();
  for (const auto& a : rs.simple) j["simple_roots"].push_back(vec_json(a));
  j["fundamental_weights"] = nlohmann::ordered_json::array();
  for (const auto& w : rs.omega)
    j["fundamental_weights"].push_back(vec_json(w));
  j["rho"] = vec_json(rs.rho);
  return j;
}

// Vogel-plane point of the algebra in minimal normalization (al = -2).
inline VogelPoint vogel_point(AlgebraId id) {
  switch (id.fam) {
    case Family::A: return point_A(id.rank);
    case Family::B: return point_B(id.rank);
    case Family::C: return point_C(id.rank);
    case Family::D: return point_D(id.rank);
    case Family::G: return point_G2();
    case Family::F: return point_F4();
    case Family::E:
      if (id.rank == 6) return point_E6();
      if (id.rank == 7) return point_E7();
      return point_E8();
  }
  throw std::invalid_argument("bad family");
}

}  // namespace uvd
