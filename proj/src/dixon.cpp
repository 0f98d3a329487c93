#include "trivsrc/chartab.hpp"
#include "trivsrc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

// Burnside-Dixon: the vectors (|K_k| chi(g_k)/chi(1))_k are the common
// eigenvectors of the class-multiplication matrices. Over F_q with
// q = 1 (mod exp G) all eigenvalues live in the prime field, so splitting is
// plain linear algebra; character values are recovered by counting, for each
// class rep g of order m, the multiplicity of every m-th root of unity among
// the eigenvalues of the representing matrix at g (a discrete Fourier sum over
// the power classes g^j), and q > 2 sqrt|G| makes those counts unambiguous.

namespace trivsrc {

namespace {

using ll = long long;

ll pow_mod(ll b, ll e, ll q) {
  ll r = 1;
  b %= q;
  while (e > 0) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

ll inv_mod(ll a, ll q) { return pow_mod((a % q + q) % q, q - 2, q); }

bool is_prime(ll n) {
  if (n < 2) return false;
  for (ll d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ll pick_prime(long exponent, long order) {
  for (ll q = 1 + exponent;; q += exponent) {
    if (q > 1000000) throw ScopeError("no suitable prime below 1e6 for lifting");
    if (q * q <= 4 * static_cast<ll>(order)) continue;
    if (is_prime(q)) return q;
  }
}

ll smallest_primitive_root(ll q) {
  std::vector<ll> prime_factors;
  ll m = q - 1;
  for (ll d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (ll g = 2; g < q; ++g) {
    bool ok = true;
    for (ll p : prime_factors)
      if (pow_mod(g, (q - 1) / p, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw StructureError("no primitive root found");
}

using Vec = std::vector<ll>; // length n, entries mod q
using Mat = std::vector<Vec>;

// Row-reduce in place; returns the pivot column of each surviving row.
// Zero rows are dropped. Deterministic (first nonzero pivot).
std::vector<int> rref(Mat& rows, ll q) {
  std::vector<int> pivots;
  size_t r = 0;
  const size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    ll scale = inv_mod(rows[r][c], q);
    for (ll& x : rows[r]) x = x * scale % q;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      ll f = rows[i][c];
      for (size_t cc = 0; cc < ncols; ++cc)
        rows[i][cc] = ((rows[i][cc] - f * rows[r][cc]) % q + q) % q;
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

ll det_mod(Mat m, ll q) {
  const size_t d = m.size();
  ll det = 1;
  for (size_t c = 0; c < d; ++c) {
    size_t sel = c;
    while (sel < d && m[sel][c] == 0) ++sel;
    if (sel == d) return 0;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = q - det;
    }
    det = det * m[c][c] % q;
    ll scale = inv_mod(m[c][c], q);
    for (size_t i = c + 1; i < d; ++i) {
      if (m[i][c] == 0) continue;
      ll f = m[i][c] * scale % q;
      for (size_t cc = c; cc < d; ++cc)
        m[i][cc] = ((m[i][cc] - f * m[c][cc]) % q + q) % q;
    }
  }
  return det % q;
}

// det(B - x I) as coefficient vector (degree d), via interpolation at
// x = 0..d. Requires q > d.
Vec char_poly(const Mat& b, ll q) {
  const size_t d = b.size();
  std::vector<ll> xs(d + 1), ys(d + 1);
  for (size_t t = 0; t <= d; ++t) {
    Mat m = b;
    for (size_t i = 0; i < d; ++i)
      m[i][i] = ((m[i][i] - static_cast<ll>(t)) % q + q) % q;
    xs[t] = static_cast<ll>(t);
    ys[t] = det_mod(std::move(m), q);
  }
  // Newton form on the nodes 0..d, then expand.
  std::vector<ll> divided = ys;
  for (size_t level = 1; level <= d; ++level)
    for (size_t i = d; i >= level; --i) {
      ll denom = inv_mod(((xs[i] - xs[i - level]) % q + q) % q, q);
      divided[i] = (divided[i] - divided[i - 1] + q) % q * denom % q;
    }
  Vec coeff(d + 1, 0);
  Vec base(d + 1, 0); // product (x - x_0)...(x - x_{k-1})
  base[0] = 1;
  size_t base_deg = 0;
  for (size_t k = 0; k <= d; ++k) {
    for (size_t j = 0; j <= base_deg; ++j)
      coeff[j] = (coeff[j] + divided[k] * base[j]) % q;
    if (k == d) break;
    for (size_t j = base_deg + 2; j-- > 0;) {
      ll shifted = j > 0 ? base[j - 1] : 0;
      base[j] = (shifted + (q - xs[k]) % q * base[j]) % q;
    }
    ++base_deg;
  }
  return coeff;
}

std::vector<ll> poly_roots(const Vec& coeff, ll q) {
  std::vector<ll> roots;
  for (ll x = 0; x < q; ++x) {
    ll val = 0;
    for (size_t j = coeff.size(); j-- > 0;) val = (val * x + coeff[j]) % q;
    if (val == 0) roots.push_back(x);
  }
  return roots;
}

// Null space of a square matrix, vectors in deterministic order.
Mat kernel_basis(Mat m, ll q) {
  const size_t d = m.empty() ? 0 : m[0].size();
  std::vector<int> pivots = rref(m, q);
  std::vector<bool> is_pivot(d, false);
  for (int p : pivots) is_pivot[p] = true;
  Mat basis;
  for (size_t f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    Vec x(d, 0);
    x[f] = 1;
    for (size_t r = 0; r < m.size(); ++r)
      x[pivots[r]] = (q - m[r][f]) % q;
    basis.push_back(std::move(x));
  }
  return basis;
}

} // namespace

TablePtr dixon_character_table(const GroupPtr& g) {
  const int n = g->num_classes();
  const long e = g->exponent();
  const ll q = pick_prime(e, g->order());
  const ll sigma = smallest_primitive_root(q);

  std::vector<int> cols = g->canonical_class_order();
  std::vector<int> col_of_class(n);
  for (int c = 0; c < n; ++c) col_of_class[cols[c]] = c;
  std::vector<ll> size_mod(n), size_inv(n);
  std::vector<int> inv_col(n);
  for (int c = 0; c < n; ++c) {
    const ConjClass& cc = g->cls(cols[c]);
    size_mod[c] = cc.size % q;
    size_inv[c] = inv_mod(size_mod[c], q);
    inv_col[c] = col_of_class[g->class_of(g->inv(cc.rep))];
  }

  // Structure constants c_{ijk} = #{x in K_i : x^{-1} g_k in K_j}.
  std::vector<Mat> cmat(n, Mat(n, Vec(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int gk = g->cls(cols[k]).rep;
      for (int x : g->cls(cols[i]).members) {
        int j = col_of_class[g->class_of(g->mul(g->inv(x), gk))];
        cmat[i][j][k] = (cmat[i][j][k] + 1) % q;
      }
    }

  // Split the common eigenspaces. Bases are kept row-reduced so coordinates
  // can be read off the pivot positions.
  std::vector<Mat> spaces;
  std::vector<std::vector<int>> space_pivots;
  {
    Mat full(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) full[i][i] = 1;
    std::vector<int> piv(n);
    std::iota(piv.begin(), piv.end(), 0);
    spaces.push_back(std::move(full));
    space_pivots.push_back(std::move(piv));
  }
  for (int i = 1; i < n; ++i) {
    bool all_split = true;
    for (const Mat& v : spaces)
      if (v.size() > 1) all_split = false;
    if (all_split) break;

    std::vector<Mat> next_spaces;
    std::vector<std::vector<int>> next_pivots;
    for (size_t si = 0; si < spaces.size(); ++si) {
      const Mat& basis = spaces[si];
      const size_t d = basis.size();
      if (d == 1) {
        next_spaces.push_back(basis);
        next_pivots.push_back(space_pivots[si]);
        continue;
      }
      // Action matrix: B[r][c] = coordinate of A_i * v_c along v_r.
      Mat image(d, Vec(n, 0));
      for (size_t c = 0; c < d; ++c)
        for (int row = 0; row < n; ++row) {
          ll acc = 0;
          for (int k = 0; k < n; ++k)
            acc = (acc + cmat[i][row][k] * basis[c][k]) % q;
          image[c][row] = acc;
        }
      Mat b(d, Vec(d, 0));
      for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c)
          b[r][c] = image[c][space_pivots[si][r]];

      std::vector<ll> eigenvalues;
      if (q > static_cast<ll>(d)) {
        eigenvalues = poly_roots(char_poly(b, q), q);
      } else {
        for (ll x = 0; x < q; ++x) eigenvalues.push_back(x);
      }
      size_t found = 0;
      for (ll lambda : eigenvalues) {
        Mat shifted = b;
        for (size_t r = 0; r < d; ++r)
          shifted[r][r] = (shifted[r][r] - lambda + q) % q;
        Mat ker = kernel_basis(std::move(shifted), q);
        if (ker.empty()) continue;
        Mat sub;
        for (const Vec& coords : ker) {
          Vec w(n, 0);
          for (size_t c = 0; c < d; ++c)
            for (int k = 0; k < n; ++k)
              w[k] = (w[k] + coords[c] * basis[c][k]) % q;
          sub.push_back(std::move(w));
        }
        std::vector<int> piv = rref(sub, q);
        found += sub.size();
        next_spaces.push_back(std::move(sub));
        next_pivots.push_back(std::move(piv));
      }
      if (found != d) throw StructureError("eigenspace splitting failure");
    }
    spaces = std::move(next_spaces);
    space_pivots = std::move(next_pivots);
  }
  for (const Mat& v : spaces)
    if (v.size() != 1) throw StructureError("eigenspace splitting failure");

  // One character per eigenvector.
  const ll order_mod = g->order() % q;
  long degree_cap = 1;
  while ((degree_cap + 1) * (degree_cap + 1) <= g->order()) ++degree_cap;

  auto t = std::make_shared<CharTable>();
  t->group = g;
  for (int c = 0; c < n; ++c) {
    const ConjClass& cc = g->cls(cols[c]);
    t->classes.push_back({cc.rep, cc.size, cc.order});
  }
  t->group_order = g->order();
  t->group_class_to_col = col_of_class;

  for (const Mat& space : spaces) {
    Vec v = space[0];
    if (v[0] == 0) // identity class is the first column; omega(1) = 1 there
      throw StructureError("eigenvector vanishes at the identity class");
    ll norm = inv_mod(v[0], q);
    for (ll& x : v) x = x * norm % q;

    ll s = 0;
    for (int k = 0; k < n; ++k)
      s = (s + v[k] * v[inv_col[k]] % q * size_inv[k]) % q;
    ll target = order_mod * inv_mod(s, q) % q;
    long deg = 0;
    for (long tcand = 1; tcand <= degree_cap; ++tcand)
      if (static_cast<ll>(tcand) * tcand % q == target) {
        deg = tcand;
        break;
      }
    if (deg == 0) throw StructureError("no degree matches the eigenvector");

    std::vector<ll> chi_q(n);
    for (int k = 0; k < n; ++k) chi_q[k] = deg % q * v[k] % q * size_inv[k] % q;

    std::vector<CycNum> row(n);
    for (int k = 0; k < n; ++k) {
      const long m = g->cls(cols[k]).order;
      const int rep = g->cls(cols[k]).rep;
      const ll z = pow_mod(sigma, (q - 1) / m, q);
      const ll m_inv = inv_mod(m % q, q);
      std::vector<ll> chi_pow(m);
      for (long j = 0; j < m; ++j)
        chi_pow[j] = chi_q[col_of_class[g->class_of(g->power(rep, j))]];
      CycNum val;
      ll total = 0;
      for (long ex = 0; ex < m; ++ex) {
        ll mu = 0;
        for (long j = 0; j < m; ++j) {
          ll zp = pow_mod(z, (m - ex * j % m) % m, q);
          mu = (mu + chi_pow[j] * zp) % q;
        }
        mu = mu * m_inv % q; // true multiplicity: 0 <= mu <= deg < q
        if (mu > static_cast<ll>(deg))
          throw StructureError("root-of-unity multiplicity out of range");
        total += mu;
        if (mu != 0)
          val += CycNum::root_of_unity(m, ex).scaled(Rat(mu));
      }
      if (total != deg)
        throw StructureError("multiplicities do not sum to the degree");
      row[k] = std::move(val);
    }
    t->irr.push_back(std::move(row));
  }

  std::sort(t->irr.begin(), t->irr.end(),
            [](const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
              for (size_t i = 0; i < a.size(); ++i) {
                if (a[i] < b[i]) return true;
                if (b[i] < a[i]) return false;
              }
              return false;
            });
  t->names.clear();
  for (int i = 1; i <= n; ++i) t->names.push_back("chi_" + std::to_string(i));
  validate_character_table(*t);
  return t;
}

} // namespace trivsrc
