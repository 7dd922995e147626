#include "modular.hpp"

#include <algorithm>

#include "brunnel/errors.hpp"

namespace brunnel::modp {

std::int64_t Field::inv(std::int64_t a) const {
  std::int64_t t = 0, nt = 1, r = p, nr = reduce(a);
  if (nr == 0) throw Error("inverse of zero in F_p");
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return reduce(t);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly reduce(const Field& f, const IntPoly& a) {
  Poly out;
  out.reserve(a.coeffs().size());
  Integer pm = f.p;
  for (const auto& c : a.coeffs()) {
    Integer r = c % pm;
    if (r < 0) r += pm;
    out.push_back(r.get_si());
  }
  trim(out);
  return out;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.reduce(out[i] + b[i]);
  trim(out);
  return out;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.reduce(out[i] - b[i]);
  trim(out);
  return out;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % f.p;
  }
  trim(out);
  return out;
}

Poly scale(const Field& f, const Poly& a, std::int64_t k) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], f.reduce(k));
  trim(out);
  return out;
}

void divmod(const Field& f, const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) throw Error("division by zero polynomial in F_p");
  r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) {
    q.clear();
    return;
  }
  q.assign(static_cast<std::size_t>(degree(r) - db) + 1, 0);
  const std::int64_t ib = f.inv(b.back());
  for (int i = degree(r) - db; i >= 0; --i) {
    std::int64_t c = f.mul(r[static_cast<std::size_t>(i + db)], ib);
    q[static_cast<std::size_t>(i)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& x = r[static_cast<std::size_t>(i + j)];
      x = f.reduce(x - f.mul(c, b[static_cast<std::size_t>(j)]));
    }
  }
  trim(q);
  trim(r);
}

Poly rem(const Field& f, const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(f, a, b, q, r);
  return r;
}

Poly monic(const Field& f, const Poly& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

Poly gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Poly ext_gcd(const Field& f, const Poly& a, const Poly& b, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    Poly q, r;
    divmod(f, r0, r1, q, r);
    Poly s2 = sub(f, s0, mul(f, q, s1));
    Poly t2 = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = s0;
    t = t0;
    return r0;
  }
  std::int64_t k = f.inv(r0.back());
  s = scale(f, s0, k);
  t = scale(f, t0, k);
  return scale(f, r0, k);
}

Poly derivative(const Field& f, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = f.mul(a[i], f.reduce(static_cast<std::int64_t>(i)));
  trim(out);
  return out;
}

namespace {

// Basis of the left null space of m (rows x cols), i.e. vectors v with
// v*m = 0, by Gaussian elimination on the transpose.
std::vector<std::vector<std::int64_t>> left_null_space(const Field& f, const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  // a = m^T, solve a x = 0.
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[j][i] = m[i][j];

  std::vector<int> is_pivot(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(a[sel], a[row]);
    std::int64_t iv = f.inv(a[row][col]);
    for (auto& x : a[row]) x = f.mul(x, iv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      std::int64_t c = a[r][col];
      for (std::size_t k = 0; k < n; ++k) a[r][k] = f.reduce(a[r][k] - f.mul(c, a[row][k]));
    }
    is_pivot[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free] >= 0) continue;
    std::vector<std::int64_t> v(n, 0);
    v[free] = 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (is_pivot[col] < 0) continue;
      v[col] = f.reduce(-a[static_cast<std::size_t>(is_pivot[col])][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

std::vector<Poly> berlekamp(const Field& f, const Poly& a_in) {
  Poly a = monic(f, a_in);
  const int n = degree(a);
  if (n <= 0) return {};
  if (n == 1) return {a};

  // Row i holds x^{ip} mod a, minus the identity.
  std::vector<std::vector<std::int64_t>> q(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  Poly xp;
  {
    // x^p mod a by square-and-multiply.
    Poly base{0, 1};
    Poly acc{1};
    std::int64_t e = f.p;
    while (e > 0) {
      if (e & 1) acc = rem(f, mul(f, acc, base), a);
      base = rem(f, mul(f, base, base), a);
      e >>= 1;
    }
    xp = acc;
  }
  Poly cur{1};
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.size(); ++j) q[static_cast<std::size_t>(i)][j] = cur[j];
    q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = f.reduce(q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] - 1);
    cur = rem(f, mul(f, cur, xp), a);
  }
  auto basis = left_null_space(f, q);
  const std::size_t r = basis.size();
  std::vector<Poly> factors{a};
  if (r == 1) return factors;

  for (const auto& v : basis) {
    Poly vp(v.begin(), v.end());
    trim(vp);
    if (degree(vp) <= 0) continue;
    std::vector<Poly> next;
    for (const auto& g : factors) {
      Poly rest = g;
      for (std::int64_t s = 0; s < f.p && degree(rest) > 0; ++s) {
        Poly shifted = sub(f, vp, Poly{s});
        Poly d = gcd(f, rest, shifted);
        if (degree(d) > 0 && degree(d) < degree(rest)) {
          next.push_back(d);
          Poly qq, rr;
          divmod(f, rest, d, qq, rr);
          rest = monic(f, qq);
        }
      }
      if (degree(rest) > 0) next.push_back(rest);
    }
    factors = std::move(next);
    if (factors.size() == r) break;
  }
  if (factors.size() != r) throw Error("Berlekamp splitting did not reach the expected factor count");
  std::sort(factors.begin(), factors.end(), poly_less);
  return factors;
}

}  // namespace brunnel::modp
