// Factorization over Q: content extraction, then modular factorization,
// Hensel lifting and recombination (Zassenhaus).

#include <algorithm>
#include <numeric>
#include <optional>

#include "factor_internal.hpp"
#include "galois/errors.hpp"
#include "galois/factorization.hpp"

namespace galois {

namespace {

// Integer polynomial, ascending coefficients, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

ZPoly zadd(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  ztrim(a);
  return a;
}

ZPoly zmod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

// Symmetric residues in (-m/2, m/2].
ZPoly zsymmetric(ZPoly a, const mpz_class& m) {
  mpz_class half = m / 2;
  for (auto& c : a) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

// Remainder modulo a monic b, coefficients reduced mod m.
ZPoly zrem_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
  a = zmod(std::move(a), m);
  const int db = zdeg(b);
  while (zdeg(a) >= db) {
    mpz_class lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= lead * b[j];
    a = zmod(std::move(a), m);
  }
  return a;
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zprimitive(ZPoly a) {
  mpz_class g = zcontent(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

// Exact division over Z; nullopt when b does not divide a.
std::optional<ZPoly> zdivide_exact(ZPoly a, const ZPoly& b) {
  const int db = zdeg(b);
  if (zdeg(a) < db) return a.empty() ? std::optional<ZPoly>(ZPoly{}) : std::nullopt;
  ZPoly q(a.size() - b.size() + 1, 0);
  while (zdeg(a) >= db) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class t = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = t;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= t * b[j];
    ztrim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

// ----------------------------------------------------- bridging to Polynomial

Polynomial to_fp(const ZPoly& a, const Field& fp) {
  std::vector<FieldElement> c;
  for (const auto& v : a) c.push_back(fp.from_scalar(fp.base_field().from_integer(Integer(v))));
  return {fp, std::move(c)};
}

ZPoly from_fp(const Polynomial& a) {
  ZPoly r;
  for (const auto& c : a.coefficients()) r.emplace_back(static_cast<unsigned long>(c.base_value().residue().value()));
  ztrim(r);
  return r;
}

// Primitive integer polynomial with the same roots as a rational one.
ZPoly to_primitive_integer(const Polynomial& f) {
  mpz_class lcm = 1;
  for (const auto& c : f.coefficients()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.base_value().rational().mpq().get_den_mpz_t());
  }
  ZPoly r;
  for (const auto& c : f.coefficients()) {
    mpq_class v = c.base_value().rational().mpq() * lcm;
    r.push_back(v.get_num());
  }
  return zprimitive(std::move(r));
}

Polynomial to_monic_rational(const ZPoly& a, const Field& q) {
  std::vector<FieldElement> c;
  for (const auto& v : a) c.push_back(q.from_rational(Rational(mpq_class(v, a.back()))));
  return {q, std::move(c)};
}

// ----------------------------------------------------------- Hensel lifting

// Lifts monic a, b with a b = f (mod p) to a b = f (mod p^k); f monic mod p^k.
void hensel_lift_pair(const ZPoly& f, ZPoly& a, ZPoly& b, const mpz_class& p, unsigned k, const Field& fp) {
  auto g = poly_xgcd(to_fp(a, fp), to_fp(b, fp));
  if (g.gcd.degree() != 0) throw InternalError("Hensel lifting of non-coprime modular factors");
  const ZPoly s = from_fp(g.s);
  const ZPoly t = from_fp(g.t);
  mpz_class modulus = p;
  for (unsigned j = 1; j < k; ++j) {
    mpz_class next = modulus * p;
    ZPoly e = zmod(zsub(f, zmul(a, b)), next);
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    // a' b + b' a = e (mod p) with deg a' < deg a, deg b' < deg b.
    ZPoly da = zrem_monic(zmul(t, e), a, p);
    ZPoly db = zrem_monic(zmul(s, e), b, p);
    for (auto& c : da) c *= modulus;
    for (auto& c : db) c *= modulus;
    a = zmod(zadd(a, da), next);
    b = zmod(zadd(b, db), next);
    modulus = std::move(next);
  }
}

// Lifts monic modular factors of the monic (mod p^k) polynomial f.
std::vector<ZPoly> hensel_lift(const ZPoly& f, std::vector<ZPoly> factors, const mpz_class& p, unsigned k,
                               const mpz_class& pk, const Field& fp) {
  if (factors.size() == 1) return {zmod(f, pk)};
  const std::size_t half = factors.size() / 2;
  ZPoly a{1}, b{1};
  for (std::size_t i = 0; i < half; ++i) a = zmod(zmul(a, factors[i]), p);
  for (std::size_t i = half; i < factors.size(); ++i) b = zmod(zmul(b, factors[i]), p);
  hensel_lift_pair(f, a, b, p, k, fp);
  std::vector<ZPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<ZPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  auto out = hensel_lift(a, std::move(left), p, k, pk, fp);
  auto more = hensel_lift(b, std::move(right), p, k, pk, fp);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

// ------------------------------------------------------------- Zassenhaus

struct ModularImage {
  mpz_class p;
  std::vector<ZPoly> factors;  // monic mod p
};

ModularImage choose_prime(const ZPoly& f) {
  constexpr int kGoodPrimes = 6;
  constexpr int kMaxCandidates = 400;
  std::optional<ModularImage> best;
  int good = 0;
  mpz_class p = 2;
  for (int tries = 0; tries < kMaxCandidates && good < kGoodPrimes; ++tries) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (mpz_divisible_p(f.back().get_mpz_t(), p.get_mpz_t())) continue;
    Field fp(BaseField::prime(Integer(p)));
    Polynomial fm = to_fp(f, fp);
    if (!is_squarefree(fm)) continue;
    ++good;
    Factorization fac = factor_over_prime_field(fm, 0);
    ModularImage image{p, {}};
    for (const auto& fc : fac.factors) image.factors.push_back(from_fp(fc.polynomial));
    if (!best || image.factors.size() < best->factors.size()) best = std::move(image);
    if (best->factors.size() == 1) break;
  }
  if (!best) throw InternalError("no prime keeps a squarefree integer polynomial squarefree");
  return *best;
}

// Irreducible factors over Z of a primitive squarefree polynomial.
std::vector<ZPoly> zassenhaus(ZPoly f, const FactorOptions& options) {
  if (zdeg(f) <= 1) return {f};
  ModularImage image = choose_prime(f);
  if (image.factors.size() == 1) return {f};

  // Any factor's coefficients are bounded by 2^n ||f||_2; recombined
  // candidates carry an extra factor lc(f).
  const auto n = static_cast<unsigned long>(zdeg(f));
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm = sqrt(norm2) + 1;
  mpz_class bound = 2 * abs(f.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  unsigned k = 1;
  mpz_class pk = image.p;
  while (pk <= bound) {
    pk *= image.p;
    ++k;
  }

  Field fp(BaseField::prime(Integer(image.p)));
  mpz_class lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
  ZPoly monic = f;
  for (auto& c : monic) c *= lc_inv;
  monic = zmod(std::move(monic), pk);
  std::vector<ZPoly> lifted = hensel_lift(monic, image.factors, image.p, k, pk, fp);

  std::vector<ZPoly> result;
  std::size_t tried = 0;
  for (std::size_t s = 1; 2 * s <= lifted.size();) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (++tried > options.max_recombination_subsets) {
        throw CapabilityError("factor recombination exceeded " + std::to_string(options.max_recombination_subsets) +
                              " subsets");
      }
      ZPoly cand{f.back()};
      for (std::size_t i : idx) cand = zmod(zmul(cand, lifted[i]), pk);
      cand = zprimitive(zsymmetric(std::move(cand), pk));
      if (auto q = zdivide_exact(f, cand)) {
        result.push_back(std::move(cand));
        f = std::move(*q);
        for (std::size_t j = idx.size(); j-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[j]));
        found = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zdeg(f) > 0) result.push_back(zprimitive(std::move(f)));
  return result;
}

}  // namespace

Factorization factor_over_rationals(const Polynomial& f, const FactorOptions& options) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  const Field& q = f.field();
  if (q.level() != 0 || !q.base_field().is_rationals()) throw DomainError("factor_over_rationals needs coefficients in Q");
  std::vector<Factor> factors;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    if (static_cast<std::size_t>(part.degree()) > options.max_rational_degree) {
      throw CapabilityError("rational factorization of degree " + std::to_string(part.degree()) +
                            " exceeds the configured bound " + std::to_string(options.max_rational_degree));
    }
    for (const auto& z : zassenhaus(to_primitive_integer(part), options)) {
      factors.push_back({to_monic_rational(z, q), mult});
    }
  }
  return detail::make_factorization(f.leading(), std::move(factors));
}

}  // namespace galois
