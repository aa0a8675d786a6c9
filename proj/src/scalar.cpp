#include "semient/scalar.hpp"

#include <charconv>
#include <ostream>

namespace semient {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U)
      result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0)
      return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::uint64_t reduce_signed(long long n, std::uint64_t p) {
  if (n >= 0)
    return static_cast<std::uint64_t>(n) % p;
  const auto magnitude = static_cast<std::uint64_t>(-(n + 1)) + 1;
  const std::uint64_t r = magnitude % p;
  return r == 0 ? 0 : p - r;
}

std::uint64_t reduce_mpz(const mpz_class &z, std::uint64_t p) {
  const mpz_class modulus(std::to_string(p));
  mpz_class m = z % modulus;
  if (m < 0)
    m += modulus;
  return std::stoull(m.get_str());
}

bool valid_integer(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      return false;
  return true;
}

} // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 62U) || !is_prime(p))
    throw std::invalid_argument("field modulus must be a prime below 2^62, got " + std::to_string(p));
  return Field{p};
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q")
    return rationals();
  if (spec.substr(0, 3) == "fp:") {
    std::uint64_t p = 0;
    const auto digits = spec.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw std::invalid_argument("bad field spec '" + std::string(spec) + "'");
    return prime(p);
  }
  throw std::invalid_argument("bad field spec '" + std::string(spec) + "' (expected q or fp:<p>)");
}

std::string Field::name() const { return is_rational() ? "q" : "fp:" + std::to_string(modulus_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  Scalar s;
  s.field_ = *this;
  if (is_rational())
    s.q_ = static_cast<long>(n);
  else
    s.r_ = reduce_signed(n, modulus_);
  return s;
}

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0)
    throw std::invalid_argument("zero denominator");
  return from_int(num) / from_int(den);
}

Scalar Field::parse_scalar(std::string_view text) const {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num_text) || !valid_integer(den_text))
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  const auto strip_plus = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
  mpz_class num(strip_plus(num_text));
  mpz_class den(strip_plus(den_text));
  if (den == 0)
    throw std::invalid_argument("zero denominator in scalar '" + std::string(text) + "'");
  Scalar s;
  s.field_ = *this;
  if (is_rational()) {
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }
  const std::uint64_t d = reduce_mpz(den, modulus_);
  if (d == 0)
    throw std::invalid_argument("denominator of '" + std::string(text) + "' vanishes in " + name());
  s.r_ = mul_mod(reduce_mpz(num, modulus_), pow_mod(d, modulus_ - 2, modulus_), modulus_);
  return s;
}

void Scalar::require_same_field(const Scalar &other) const {
  if (!(field_ == other.field_))
    throw std::domain_error("arithmetic between " + field_.name() + " and " + other.field_.name());
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.modulus(); }

Scalar Scalar::inverse() const {
  if (is_zero())
    throw std::domain_error("inverse of zero");
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = pow_mod(r_, field_.modulus() - 2, field_.modulus());
  return s;
}

Scalar &Scalar::operator+=(const Scalar &rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ += rhs.q_;
  } else {
    r_ += rhs.r_;
    if (r_ >= field_.modulus())
      r_ -= field_.modulus();
  }
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &rhs) {
  require_same_field(rhs);
  if (field_.is_rational())
    q_ -= rhs.q_;
  else
    r_ = r_ >= rhs.r_ ? r_ - rhs.r_ : r_ + field_.modulus() - rhs.r_;
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &rhs) {
  require_same_field(rhs);
  if (field_.is_rational())
    q_ *= rhs.q_;
  else
    r_ = mul_mod(r_, rhs.r_, field_.modulus());
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  return s;
}

void Scalar::add_product(const Scalar &a, const Scalar &b) {
  require_same_field(a);
  require_same_field(b);
  if (field_.is_rational()) {
    if (sgn(a.q_) == 0 || sgn(b.q_) == 0)
      return;
    q_ += a.q_ * b.q_;
  } else {
    r_ = static_cast<std::uint64_t>((static_cast<u128>(a.r_) * b.r_ + r_) % field_.modulus());
  }
}

bool operator==(const Scalar &a, const Scalar &b) {
  a.require_same_field(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const { return field_.is_rational() ? q_.get_str() : std::to_string(r_); }

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

} // namespace semient
