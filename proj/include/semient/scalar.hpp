#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace semient {

class Scalar;

/// Ground field selector: the rationals, or a prime field F_p.
///
/// A Field is a small value type; two fields compare equal iff they have the
/// same modulus (0 for the rationals).
class Field {
public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless p is a prime below 2^62.
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "fp:<p>".
  static Field parse(std::string_view spec);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t modulus() const { return modulus_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_fraction(long long num, long long den) const;
  /// Parses "n" or "n/d" (d != 0) exactly. Throws std::invalid_argument.
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field &, const Field &) = default;

private:
  explicit Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

/// Exact field element. Arithmetic between elements of different fields
/// throws std::domain_error.
class Scalar {
public:
  Scalar() = default;

  const Field &field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar inverse() const;

  Scalar &operator+=(const Scalar &rhs);
  Scalar &operator-=(const Scalar &rhs);
  Scalar &operator*=(const Scalar &rhs);
  Scalar &operator/=(const Scalar &rhs);
  Scalar operator-() const;

  /// this += a * b, without a temporary in the rational case.
  void add_product(const Scalar &a, const Scalar &b);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  friend bool operator==(const Scalar &a, const Scalar &b);

  /// Canonical text: "n" or "n/d" with d > 0 in lowest terms; residues in
  /// [0, p) for prime fields.
  std::string to_string() const;

  const mpq_class &rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

private:
  friend class Field;

  void require_same_field(const Scalar &other) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace semient
