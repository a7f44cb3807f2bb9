#include "erq/rational.hpp"

#include <cctype>

#include "erq/error.hpp"

namespace erq {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer integer_from(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_text(s)) throw DomainError("malformed rational '" + std::string(text) + "'");
    return Rational(integer_from(s));
  }
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = trim(s.substr(slash + 1));
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-') {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  return Rational(integer_from(num), integer_from(den));
}

Integer Rational::height() const {
  Integer n = ::abs(value_.get_num());
  const Integer& d = value_.get_den();
  return n > d ? n : d;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
  return Rational(inv);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  mpq_class r;
  mpq_set_num(r.get_mpq_t(), n.get_mpz_t());
  mpq_set_den(r.get_mpq_t(), d.get_mpz_t());
  // powers of coprime integers stay coprime
  Rational out;
  out.value_ = r;
  return out;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  value_ /= other.value_;
  return *this;
}

std::size_t Rational::hash() const noexcept {
  auto limb_hash = [](mpz_srcptr z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
    const std::size_t n = mpz_size(z);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  };
  const std::size_t a = limb_hash(value_.get_num_mpz_t());
  const std::size_t b = limb_hash(value_.get_den_mpz_t());
  return a ^ (b * 0xff51afd7ed558ccdULL);
}

}  // namespace erq
