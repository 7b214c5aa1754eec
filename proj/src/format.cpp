#include "galois/format.hpp"

#include <vector>

namespace galois {

namespace {

// Monomial in the generators for a flattened coordinate index.
std::string monomial(const Field& field, std::size_t index) {
  std::vector<std::size_t> degrees;
  std::vector<std::string> names;
  for (std::size_t lvl = 1; lvl <= field.level(); ++lvl) {
    Field f = field.ancestor(lvl);
    degrees.push_back(f.relative_degree());
    names.push_back(f.generator_name());
  }
  std::string out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    std::size_t e = index % degrees[i];
    index /= degrees[i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

struct Term {
  bool negative;
  std::string magnitude;  // absolute value of the coefficient, "" when 1
  std::string rest;       // monomial part, "" for constants
};

Term make_term(const Scalar& c, std::string rest) {
  bool negative = c.is_rational() && c.rational().sign() < 0;
  Scalar mag = negative ? -c : c;
  std::string m = mag.is_one() && !rest.empty() ? "" : mag.to_string();
  return {negative, std::move(m), std::move(rest)};
}

std::string join(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    if (i == 0) {
      if (t.negative) out += "-";
    } else {
      out += t.negative ? " - " : " + ";
    }
    out += t.magnitude;
    if (!t.magnitude.empty() && !t.rest.empty()) out += "*";
    out += t.rest;
  }
  return out;
}

}  // namespace

std::string to_string(const FieldElement& x) {
  std::vector<Term> terms;
  auto coords = x.coordinates();
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i].is_zero()) continue;
    terms.push_back(make_term(coords[i], monomial(x.field(), i)));
  }
  return join(terms);
}

std::string to_string(const Polynomial& f, const std::string& variable) {
  std::vector<Term> terms;
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    std::string power = i == 0 ? "" : (i == 1 ? variable : variable + "^" + std::to_string(i));
    // A coefficient with a single term keeps the flat form; compound ones
    // are parenthesized.
    std::size_t nonzero = 0;
    std::size_t where = 0;
    auto coords = c[i].coordinates();
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (!coords[j].is_zero()) {
        ++nonzero;
        where = j;
      }
    }
    if (nonzero == 1) {
      std::string mono = monomial(f.field(), where);
      std::string rest = mono;
      if (!power.empty()) rest = rest.empty() ? power : rest + "*" + power;
      terms.push_back(make_term(coords[where], rest));
    } else {
      terms.push_back({false, "(" + to_string(c[i]) + ")", power});
    }
  }
  return join(terms);
}

}  // namespace galois
