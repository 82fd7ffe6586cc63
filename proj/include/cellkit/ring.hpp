#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cellkit {

using Integer = mpz_class;
using Rational = mpq_class;

enum class RingKind : std::uint8_t { Integers, Rationals, PrimeField, IntegersMod };

/// Coefficient ring of an algebra: ℤ, ℚ, 𝔽_p or ℤ/m.
///
/// Moduli are kept in a machine word (below 2^62) so residues can be
/// multiplied through 128-bit intermediates.
class RingSpec {
 public:
  RingSpec() = default;

  static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
  static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0); }
  /// Throws NotPrime unless p is prime.
  static RingSpec prime_field(std::int64_t p);
  /// Requires m >= 2. A prime m still yields IntegersMod.
  static RingSpec integers_mod(std::int64_t m);

  /// Parses `Z`, `Q`, `Fp:<p>` and `Zm:<m>`.
  static RingSpec parse(std::string_view text);

  RingKind kind() const noexcept { return kind_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  bool is_modular() const noexcept {
    return kind_ == RingKind::PrimeField || kind_ == RingKind::IntegersMod;
  }
  /// ℚ, 𝔽_p, and ℤ/m with m prime all have field arithmetic.
  bool is_field() const noexcept;
  std::int64_t characteristic() const noexcept { return is_modular() ? modulus_ : 0; }

  std::string to_string() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) noexcept {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const RingSpec& a, const RingSpec& b) noexcept { return !(a == b); }

 private:
  RingSpec(RingKind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_ = RingKind::Integers;
  std::int64_t modulus_ = 0;
  bool prime_modulus_ = false;
};

std::ostream& operator<<(std::ostream& os, const RingSpec& ring);

/// An element of a RingSpec in canonical form: a big integer over ℤ, a
/// reduced fraction with positive denominator over ℚ, a residue in
/// [0, modulus) otherwise. Equality is representation equality.
class Scalar {
 public:
  Scalar() : Scalar(RingSpec::integers(), 0) {}
  Scalar(const RingSpec& ring, long value);
  Scalar(const RingSpec& ring, const Integer& value);
  /// num/den mapped into the ring; throws NotInvertible if den is not a unit
  /// there (over ℤ: if den does not divide num).
  Scalar(const RingSpec& ring, const Integer& num, const Integer& den);

  static Scalar zero(const RingSpec& ring) { return Scalar(ring, 0L); }
  static Scalar one(const RingSpec& ring) { return Scalar(ring, 1L); }

  const RingSpec& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Units: ±1 over ℤ, nonzero over ℚ, residues coprime to the modulus.
  bool is_unit() const;

  /// Numerator/denominator of the canonical representative (residues have
  /// denominator 1).
  Integer numerator() const;
  Integer denominator() const;
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  const Integer& integer() const { return std::get<Integer>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  /// this += a * b without temporaries.
  void add_product(const Scalar& a, const Scalar& b);
  /// this -= a * b without temporaries.
  void sub_product(const Scalar& a, const Scalar& b);
  void negate();

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator-(Scalar a) {
    a.negate();
    return a;
  }
  /// Field division (or exact division over ℤ).
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_same_ring(const Scalar& other) const;

  RingSpec ring_;
  std::variant<std::int64_t, Integer, Rational> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vector = std::vector<Scalar>;

Vector zero_vector(const RingSpec& ring, std::size_t n);
Vector unit_vector(const RingSpec& ring, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

/// Maps a value along the canonical reduction source -> target: ℤ→ℚ, ℤ→𝔽_p,
/// ℤ→ℤ/m, ℤ/m→𝔽_p and ℤ/m→ℤ/m' for p, m' dividing m; identity otherwise.
/// Throws NoCanonicalMap when none exists.
Scalar reduce(const Scalar& value, const RingSpec& target);
bool has_canonical_map(const RingSpec& source, const RingSpec& target);

// Number theory on machine words.
bool is_prime(std::int64_t n);
/// Distinct prime divisors in ascending order, by trial division.
std::vector<std::int64_t> prime_factors(std::int64_t n);
bool is_squarefree(std::int64_t n);

}  // namespace cellkit
