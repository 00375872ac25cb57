#include "taukit/field.hpp"

namespace taukit {

bool is_prime_number(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(long p) {
  if (!is_prime_number(p)) throw std::invalid_argument("field modulus must be prime: " + std::to_string(p));
  return Field{Kind::Prime, p};
}

mpq_class Field::reduce(const mpq_class& x) const {
  if (kind == Kind::Rational) {
    mpq_class y = x;
    y.canonicalize();
    return y;
  }
  mpq_class y = x;
  y.canonicalize();
  if (y.get_den() != 1) {
    // residue of num * den^{-1}
    mpz_class deninv;
    if (!mpz_invert(deninv.get_mpz_t(), y.get_den().get_mpz_t(), mpz_class(p).get_mpz_t()))
      throw std::domain_error("denominator not invertible mod p");
    y = mpq_class(y.get_num() * deninv);
  }
  mpz_class r = y.get_num() % p;
  if (r < 0) r += p;
  return mpq_class(r);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const { return reduce(a + b); }
mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const { return reduce(a - b); }
mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const { return reduce(a * b); }
mpq_class Field::neg(const mpq_class& a) const { return reduce(-a); }

mpq_class Field::inv(const mpq_class& a) const {
  mpq_class x = reduce(a);
  if (x == 0) throw std::domain_error("division by zero");
  if (kind == Kind::Rational) return mpq_class(1) / x;
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), x.get_num().get_mpz_t(), mpz_class(p).get_mpz_t()))
    throw std::domain_error("residue not invertible mod p");
  return mpq_class(r);
}

mpq_class Field::div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

std::string Field::str() const {
  if (kind == Kind::Rational) return "Q";
  return "F" + std::to_string(p);
}

}  // namespace taukit
