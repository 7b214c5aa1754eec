#include "test_util.hpp"

namespace galois::testing {

ExtensionTower finite_field(long p, std::size_t n) {
  const Field fp = prime_field(p);
  // Smallest monic irreducible of degree n, counting coefficients in base p.
  for (long code = 0;; ++code) {
    std::vector<long> coeffs;
    long rest = code;
    for (std::size_t i = 0; i < n; ++i) {
      coeffs.push_back(rest % p);
      rest /= p;
    }
    if (rest != 0) break;
    coeffs.push_back(1);
    Polynomial f = poly(fp, coeffs);
    if (is_irreducible(f)) return adjoin_root(ExtensionTower(fp.base_field()), f);
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::vector<Polynomial> monic_polynomials(const Field& fp, int degree) {
  const long p = static_cast<long>(fp.characteristic());
  std::vector<Polynomial> out;
  long count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (long code = 0; code < count; ++code) {
    std::vector<long> c;
    long rest = code;
    for (int i = 0; i < degree; ++i) {
      c.push_back(rest % p);
      rest /= p;
    }
    c.push_back(1);
    out.push_back(poly(fp, c));
  }
  return out;
}

// The first divisor found at each degree is irreducible, since all smaller
// ones have already been divided out.
std::map<std::string, std::size_t> brute_force_factor(Polynomial f) {
  std::map<std::string, std::size_t> out;
  const Field& k = f.field();
  f = f.monic();
  for (int d = 1; d <= f.degree(); ++d) {
    for (const auto& g : monic_polynomials(k, d)) {
      while (f.degree() >= d && poly_rem(f, g).is_zero()) {
        ++out[to_string(g)];
        f = poly_exact_div(f, g);
      }
    }
  }
  return out;
}

std::vector<FieldElement> all_elements(const Field& k) {
  const long p = static_cast<long>(k.characteristic());
  std::vector<FieldElement> out;
  long count = 1;
  for (std::size_t i = 0; i < k.dimension(); ++i) count *= p;
  for (long code = 0; code < count; ++code) {
    std::vector<Scalar> coords;
    long rest = code;
    for (std::size_t i = 0; i < k.dimension(); ++i) {
      coords.push_back(k.from_int(rest % p).base_value());
      rest /= p;
    }
    out.push_back(k.element(std::move(coords)));
  }
  return out;
}

}  // namespace galois::testing
