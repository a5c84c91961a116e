#include "vkt/poly.hpp"

#include <sstream>
#include <vector>

namespace vkt {

const char* primary_var(Ring r) {
  switch (r) {
    case Ring::TZ:
    case Ring::T:
      return "t";
    case Ring::AZ:
    case Ring::A:
      return "a";
    case Ring::Z:
      return nullptr;
  }
  return nullptr;
}

bool has_z(Ring r) { return r == Ring::TZ || r == Ring::AZ || r == Ring::Z; }

Laurent Laurent::one(Ring ring) { return monomial(ring, {0, 0}); }

Laurent Laurent::monomial(Ring ring, Exp e, mpz_class c) {
  Laurent p(ring);
  p.add_term(e, c);
  return p;
}

mpz_class Laurent::coeff(Exp e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Laurent::add_term(Exp e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r(ring_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      r.add_term({e1.x + e2.x, e1.z + e2.z}, c1 * c2);
  return r;
}

Laurent Laurent::shifted(int dx, int dz, const mpz_class& c) const {
  Laurent r(ring_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(Exp{e.x + dx, e.z + dz}, v * c);
  return r;
}

Laurent Laurent::pow(int n) const {
  Laurent r = one(ring_);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

mpz_class Laurent::eval_all_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

mpz_class Laurent::derivative_at_one(int n) const {
  bool use_z = ring_ == Ring::Z;
  mpz_class total = 0;
  for (const auto& [e, c] : terms_) {
    long ex = use_z ? e.z : e.x;
    mpz_class ff = 1;
    for (int m = 0; m < n; ++m) ff *= mpz_class(ex - m);
    total += c * ff;
  }
  return total;
}

Laurent Laurent::z_coefficient(int k) const {
  Ring out = ring_ == Ring::TZ ? Ring::T : Ring::A;
  Laurent r(out);
  for (const auto& [e, c] : terms_)
    if (e.z == k) r.add_term({e.x, 0}, c);
  return r;
}

Laurent Laurent::substitute_t_one() const {
  Laurent r(Ring::Z);
  for (const auto& [e, c] : terms_) r.add_term({0, e.z}, c);
  return r;
}

Laurent Laurent::substitute_jones() const {
  // Work in s = t^(1/2): t^i z^j -> s^(2i) (s - s^-1)^j.
  std::map<long, mpz_class> acc;
  for (const auto& [e, c] : terms_) {
    if (e.z < 0)
      throw ConsistencyError("jones substitution: negative z power (non-knot input)");
    mpz_class binom = 1;
    for (int k = 0; k <= e.z; ++k) {
      long se = 2L * e.x + e.z - 2L * k;
      mpz_class v = c * binom;
      if (k % 2) v = -v;
      auto [it, ins] = acc.emplace(se, v);
      if (!ins) it->second += v;
      binom = binom * (e.z - k) / (k + 1);
    }
  }
  Laurent r(Ring::T);
  for (const auto& [se, c] : acc) {
    if (c == 0) continue;
    if (se % 2 != 0)
      throw ConsistencyError("jones substitution: residual half-integer power (non-knot input)");
    r.add_term({static_cast<int>(se / 2), 0}, c);
  }
  return r;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  // ascending z, then descending t/a
  std::vector<std::pair<Exp, mpz_class>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first.z != b.first.z) return a.first.z < b.first.z;
    return a.first.x > b.first.x;
  });
  const char* xv = primary_var(ring_);
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : ts) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    auto var = [](const char* v, int exp) {
      return exp == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(exp);
    };
    if (e.x != 0) factors.push_back(var(xv, e.x));
    if (e.z != 0) factors.push_back(var("z", e.z));
    if (a != 1 || factors.empty()) factors.insert(factors.begin(), a.get_str());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

}  // namespace vkt
