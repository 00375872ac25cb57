#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace taukit {

// Exact scalar arithmetic over Q or over a prime field F_p.
// Values are always held as mpq_class; for F_p the value is an integer
// residue in [0, p).
struct Field {
  enum class Kind { Rational, Prime };

  Kind kind = Kind::Rational;
  long p = 0;

  static Field rational() { return Field{Kind::Rational, 0}; }
  static Field prime(long p);

  bool operator==(const Field&) const = default;

  bool is_rational() const { return kind == Kind::Rational; }

  mpq_class reduce(const mpq_class& x) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const;

  std::string str() const;
};

bool is_prime_number(long n);

}  // namespace taukit
