#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>

#include "vkt/errors.hpp"

namespace vkt {

// Which Laurent ring a polynomial lives in.  TZ and AZ are the bivariate
// rings of the link polynomials; T, A and Z are their univariate pieces
// (coefficient polynomials, Jones, Conway).
enum class Ring { TZ, AZ, T, A, Z };

const char* primary_var(Ring r);  // "t", "a" or nullptr
bool has_z(Ring r);

struct Exp {
  int x = 0;  // exponent of t or a
  int z = 0;  // exponent of z
  auto operator<=>(const Exp&) const = default;
};

// Exact Laurent polynomial with arbitrary-precision integer coefficients.
// Zero coefficients are never stored.
class Laurent {
 public:
  explicit Laurent(Ring ring) : ring_(ring) {}
  static Laurent one(Ring ring);
  static Laurent monomial(Ring ring, Exp e, mpz_class c = 1);

  Ring ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exp, mpz_class>& terms() const { return terms_; }
  mpz_class coeff(Exp e) const;

  void add_term(Exp e, const mpz_class& c);
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator*(const Laurent& o) const;
  bool operator==(const Laurent& o) const = default;

  // this * c * x^dx * z^dz
  Laurent shifted(int dx, int dz, const mpz_class& c = 1) const;
  Laurent pow(int n) const;

  // Sum of coefficients, i.e. evaluation at every variable = 1.
  mpz_class eval_all_one() const;

  // nth derivative at (primary variable) = 1 via falling factorials;
  // univariate rings only.
  mpz_class derivative_at_one(int n) const;

  // Coefficient of z^k as a univariate polynomial (TZ -> T, AZ -> A).
  Laurent z_coefficient(int k) const;

  // t := 1 (TZ -> Z).
  Laurent substitute_t_one() const;

  // z := t^(1/2) - t^(-1/2) (TZ -> T).  Throws ConsistencyError if
  // half-integer powers survive, which happens exactly for non-knots.
  Laurent substitute_jones() const;

  // Canonical text form: terms sorted by ascending z exponent, then
  // descending t/a exponent, e.g. "-t^4 + 2*t^2 + t^2*z^2".
  std::string str() const;

 private:
  Ring ring_;
  std::map<Exp, mpz_class> terms_;
};

}  // namespace vkt
