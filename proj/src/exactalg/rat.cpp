#include "pairtopo/rat.hpp"

#include "pairtopo/errors.hpp"

namespace pairtopo {

namespace {

bool isIntegerLiteral(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

mpz_class parseInteger(std::string_view s) {
  if (!isIntegerLiteral(s)) throw SchemaError("malformed rational literal '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw DomainError("zero denominator");
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw DomainError("zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parseInteger(text), mpz_class(1));
  return Rat(parseInteger(text.substr(0, slash)), parseInteger(text.substr(slash + 1)));
}

mpz_class Rat::height() const {
  mpz_class n = abs(v_.get_num());
  return n > v_.get_den() ? n : mpz_class(v_.get_den());
}

Rat Rat::inverse() const {
  if (isZero()) throw DomainError("inverse of zero");
  return Rat(mpq_class(1 / v_));
}

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

std::string Rat::toString() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.isZero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace pairtopo
