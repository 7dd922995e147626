#include <algorithm>

#include "brunnel/alexpoly.hpp"
#include "brunnel/errors.hpp"
#include "modular.hpp"

namespace brunnel {

namespace {

const std::int64_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                                61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131};
constexpr int kPrimesTried = 5;

bool intpoly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

IntPoly lift_to_int(const modp::Poly& a) {
  std::vector<Integer> v;
  v.reserve(a.size());
  for (auto c : a) v.emplace_back(static_cast<long>(c));
  return IntPoly(std::move(v));
}

// Coefficients reduced into [0, m).
IntPoly mod_nonneg(const IntPoly& a, const Integer& m) {
  std::vector<Integer> v(a.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_fdiv_r(v[i].get_mpz_t(), a.coeffs()[i].get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(v));
}

// Coefficients reduced into (-m/2, m/2].
IntPoly mod_symmetric(const IntPoly& a, const Integer& m) {
  Integer half = m / 2;
  std::vector<Integer> v(a.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_fdiv_r(v[i].get_mpz_t(), a.coeffs()[i].get_mpz_t(), m.get_mpz_t());
    if (v[i] > half) v[i] -= m;
  }
  return IntPoly(std::move(v));
}

// Lifts target = g*h (mod p) with g monic to target = G*H (mod p^k).
void hensel_lift(const IntPoly& target, const modp::Field& fp, const modp::Poly& g0, const modp::Poly& h0, int k,
                 IntPoly& g_out, IntPoly& h_out) {
  modp::Poly s, t;
  modp::Poly one = modp::ext_gcd(fp, g0, h0, s, t);
  if (one.size() != 1 || one[0] != 1) throw Error("Hensel lifting needs coprime factors");
  IntPoly g = lift_to_int(g0);
  IntPoly h = lift_to_int(h0);
  Integer pj = fp.p;
  for (int j = 1; j < k; ++j) {
    IntPoly diff = target - g * h;
    Integer modulus = pj * fp.p;
    diff = mod_nonneg(diff, modulus);
    // diff is divisible by p^j.
    std::vector<Integer> ec(diff.coeffs().size());
    for (std::size_t i = 0; i < ec.size(); ++i) mpz_divexact(ec[i].get_mpz_t(), diff.coeffs()[i].get_mpz_t(), pj.get_mpz_t());
    modp::Poly e = modp::reduce(fp, IntPoly(std::move(ec)));
    modp::Poly q, r;
    modp::divmod(fp, modp::mul(fp, t, e), g0, q, r);
    modp::Poly dh = modp::add(fp, modp::mul(fp, s, e), modp::mul(fp, q, h0));
    g = mod_nonneg(g + lift_to_int(r) * pj, modulus);
    h = mod_nonneg(h + lift_to_int(dh) * pj, modulus);
    pj = modulus;
  }
  g_out = g;
  h_out = h;
}

// Trial recombination of lifted monic factors modulo pk.
std::vector<IntPoly> zassenhaus(IntPoly f, std::vector<IntPoly> lifted, const Integer& pk) {
  std::vector<IntPoly> found;
  std::size_t d = 1;
  while (2 * d <= lifted.size()) {
    const std::size_t n = lifted.size();
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    bool matched = false;
    while (true) {
      IntPoly cand = IntPoly::constant(f.leading());
      for (auto i : idx) cand = mod_symmetric(cand * lifted[i], pk);
      cand = cand.primitive_part();
      IntPoly quotient;
      if (cand.degree() > 0 && try_divide(f, cand, quotient)) {
        found.push_back(cand);
        f = quotient.primitive_part();
        std::vector<IntPoly> rest;
        for (std::size_t i = 0, j = 0; i < n; ++i) {
          if (j < d && idx[j] == i) {
            ++j;
            continue;
          }
          rest.push_back(lifted[i]);
        }
        lifted = std::move(rest);
        matched = true;
        break;
      }
      // Next d-subset in lexicographic order.
      std::size_t pos = d;
      while (pos > 0 && idx[pos - 1] == n - d + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!matched) ++d;
  }
  if (f.degree() > 0) found.push_back(f);
  return found;
}

struct PrimeChoice {
  modp::Field field{0};
  std::vector<modp::Poly> factors;
};

}  // namespace

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p_in) {
  IntPoly p = p_in.primitive_part();
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() <= 0) return out;
  // Quotients of primitive polynomials by primitive divisors stay integral.
  IntPoly g = gcd(p, p.derivative());
  IntPoly w = exact_divide(p, g).primitive_part();
  int i = 1;
  while (w.degree() > 0) {
    IntPoly y = gcd(w, g);
    IntPoly part = exact_divide(w, y).primitive_part();
    if (part.degree() > 0) out.emplace_back(part, i);
    w = y;
    g = exact_divide(g, y).primitive_part();
    ++i;
  }
  return out;
}

std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
  if (f.degree() <= 0) return {};
  if (f.degree() == 1) return {f};
  if (f.coeff(0) == 0) throw PreconditionError("factor_squarefree needs a nonzero constant term");

  // Choose the prime with the fewest modular factors among the first few
  // good primes; ties go to the smaller prime.
  PrimeChoice best;
  int tried = 0;
  for (auto p : kPrimes) {
    modp::Field fp{p};
    Integer lc = f.leading();
    if (lc % Integer(p) == 0) continue;
    modp::Poly fb = modp::reduce(fp, f);
    if (modp::degree(modp::gcd(fp, fb, modp::derivative(fp, fb))) > 0) continue;
    auto facs = modp::berlekamp(fp, fb);
    if (best.field.p == 0 || facs.size() < best.factors.size()) {
      best.field = fp;
      best.factors = std::move(facs);
    }
    if (best.factors.size() == 1) break;
    if (++tried == kPrimesTried) break;
  }
  if (best.field.p == 0) throw Error("no suitable prime for factorization");
  if (best.factors.size() == 1) return {f.primitive_part()};

  const modp::Field fp = best.field;
  const int n = f.degree();
  // Coefficient bound for factors of lc*f: 2^n * (n+1) * |f|_inf * |lc|.
  Integer bound = f.max_norm() * Integer(n + 1) * abs(f.leading());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n) + 1);
  int k = 1;
  Integer pk = fp.p;
  while (pk <= bound) {
    pk *= fp.p;
    ++k;
  }

  // Lift one monic factor at a time off the remaining cofactor.
  std::vector<IntPoly> lifted;
  IntPoly target = f;
  modp::Poly rest_mod = modp::reduce(fp, f);
  for (std::size_t i = 0; i + 1 < best.factors.size(); ++i) {
    const modp::Poly& g0 = best.factors[i];
    modp::Poly h0, r;
    modp::divmod(fp, rest_mod, g0, h0, r);
    IntPoly g, h;
    hensel_lift(target, fp, g0, h0, k, g, h);
    lifted.push_back(g);
    target = h;
    rest_mod = h0;
  }
  {
    // Make the final cofactor monic modulo p^k.
    Integer inv;
    Integer lc = target.leading();
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    lifted.push_back(mod_nonneg(target * inv, pk));
  }
  auto out = zassenhaus(f.primitive_part(), std::move(lifted), pk);
  std::sort(out.begin(), out.end(), intpoly_less);
  return out;
}

Factorization factor(const IntPoly& p) {
  if (p.is_zero()) throw PreconditionError("factorization of the zero polynomial");
  Factorization out;
  out.content = p.content();
  if (p.leading() < 0) out.content = -out.content;
  IntPoly q = p.primitive_part();
  int tpow = 0;
  while (q.degree() > 0 && q.coeff(0) == 0) {
    std::vector<Integer> v(q.coeffs().begin() + 1, q.coeffs().end());
    q = IntPoly(std::move(v));
    ++tpow;
  }
  for (int i = 0; i < tpow; ++i) out.factors.push_back(IntPoly{0, 1});
  for (const auto& [g, e] : squarefree_decomposition(q)) {
    for (const auto& h : factor_squarefree(g)) {
      for (int j = 0; j < e; ++j) out.factors.push_back(h);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), intpoly_less);
  return out;
}

}  // namespace brunnel
