#include "cellkit/ring.hpp"

#include "cellkit/errors.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace cellkit {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 62;

std::int64_t mod_reduce(const Integer& value, std::int64_t m) {
  Integer r = value % m;
  if (r < 0) r += m;
  return r.get_si();
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

// Returns (g, x) with a*x = g mod m.
std::pair<std::int64_t, std::int64_t> mod_gcd_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    __int128 ts = old_s - static_cast<__int128>(q) * s;
    old_s = s;
    s = ts;
  }
  __int128 x = old_s % m;
  if (x < 0) x += m;
  return {old_r, static_cast<std::int64_t>(x)};
}

std::int64_t parse_int64(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

RingSpec RingSpec::prime_field(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxModulus) throw Error(ErrorCode::InvalidArgument, "modulus too large");
  RingSpec ring(RingKind::PrimeField, p);
  ring.prime_modulus_ = true;
  return ring;
}

RingSpec RingSpec::integers_mod(std::int64_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
  if (m >= kMaxModulus) throw Error(ErrorCode::InvalidArgument, "modulus too large");
  RingSpec ring(RingKind::IntegersMod, m);
  ring.prime_modulus_ = is_prime(m);
  return ring;
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) return prime_field(parse_int64(text.substr(3)));
  if (text.starts_with("Zm:")) return integers_mod(parse_int64(text.substr(3)));
  // Shorthand F2, F3, ... for prime fields.
  if (text.size() > 1 && text[0] == 'F') return prime_field(parse_int64(text.substr(1)));
  throw Error(ErrorCode::ParseError, "unknown ring descriptor '" + std::string(text) + "'");
}

bool RingSpec::is_field() const noexcept {
  return kind_ == RingKind::Rationals || prime_modulus_;
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "Fp:" + std::to_string(modulus_);
    case RingKind::IntegersMod: return "Zm:" + std::to_string(modulus_);
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const RingSpec& ring) { return os << ring.to_string(); }

Scalar::Scalar(const RingSpec& ring, long value) : ring_(ring) {
  switch (ring.kind()) {
    case RingKind::Integers: value_ = Integer(value); break;
    case RingKind::Rationals: value_ = Rational(value); break;
    default: {
      std::int64_t r = value % ring.modulus();
      if (r < 0) r += ring.modulus();
      value_ = r;
    }
  }
}

Scalar::Scalar(const RingSpec& ring, const Integer& value) : ring_(ring) {
  switch (ring.kind()) {
    case RingKind::Integers: value_ = value; break;
    case RingKind::Rationals: value_ = Rational(value); break;
    default: value_ = mod_reduce(value, ring.modulus());
  }
}

Scalar::Scalar(const RingSpec& ring, const Integer& num, const Integer& den) : ring_(ring) {
  if (den == 0) throw Error(ErrorCode::NotInvertible, "zero denominator");
  switch (ring.kind()) {
    case RingKind::Integers:
      if (num % den != 0) {
        throw Error(ErrorCode::NotInvertible,
                    num.get_str() + "/" + den.get_str() + " is not an integer");
      }
      value_ = Integer(num / den);
      break;
    case RingKind::Rationals: {
      Rational q(num, den);
      q.canonicalize();
      value_ = q;
      break;
    }
    default: {
      std::int64_t m = ring.modulus();
      std::int64_t d = mod_reduce(den, m);
      auto [g, inv] = mod_gcd_inverse(d, m);
      if (g != 1) {
        throw Error(ErrorCode::NotInvertible,
                    den.get_str() + " is not a unit in " + ring.to_string());
      }
      value_ = mod_mul(mod_reduce(num, m), inv, m);
    }
  }
}

bool Scalar::is_zero() const noexcept {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 0;
    case 1: return sgn(std::get<1>(value_)) == 0;
    default: return sgn(std::get<2>(value_)) == 0;
  }
}

bool Scalar::is_one() const noexcept {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 1;
    case 1: return std::get<1>(value_) == 1;
    default: return std::get<2>(value_) == 1;
  }
}

bool Scalar::is_unit() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return abs(integer()) == 1;
    case RingKind::Rationals: return !is_zero();
    default: return mod_gcd_inverse(residue(), ring_.modulus()).first == 1;
  }
}

Integer Scalar::numerator() const {
  switch (value_.index()) {
    case 0: return Integer(static_cast<long>(std::get<0>(value_)));
    case 1: return std::get<1>(value_);
    default: return std::get<2>(value_).get_num();
  }
}

Integer Scalar::denominator() const {
  if (value_.index() == 2) return std::get<2>(value_).get_den();
  return Integer(1);
}

Scalar Scalar::inverse() const {
  if (!is_unit()) {
    throw Error(ErrorCode::NotInvertible, to_string() + " is not a unit in " + ring_.to_string());
  }
  Scalar result = *this;
  switch (ring_.kind()) {
    case RingKind::Integers: break;  // ±1
    case RingKind::Rationals: result.value_ = Rational(1) / rational(); break;
    default: result.value_ = mod_gcd_inverse(residue(), ring_.modulus()).second;
  }
  return result;
}

void Scalar::check_same_ring(const Scalar& other) const {
  if (ring_ != other.ring_) {
    throw Error(ErrorCode::RingMismatch,
                "cannot combine " + ring_.to_string() + " with " + other.ring_.to_string());
  }
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_ring(other);
  switch (value_.index()) {
    case 0: {
      std::int64_t m = ring_.modulus();
      std::int64_t s = std::get<0>(value_) + std::get<0>(other.value_);
      if (s >= m) s -= m;
      std::get<0>(value_) = s;
      break;
    }
    case 1: std::get<1>(value_) += std::get<1>(other.value_); break;
    default: std::get<2>(value_) += std::get<2>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_ring(other);
  switch (value_.index()) {
    case 0: {
      std::int64_t s = std::get<0>(value_) - std::get<0>(other.value_);
      if (s < 0) s += ring_.modulus();
      std::get<0>(value_) = s;
      break;
    }
    case 1: std::get<1>(value_) -= std::get<1>(other.value_); break;
    default: std::get<2>(value_) -= std::get<2>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_ring(other);
  switch (value_.index()) {
    case 0:
      std::get<0>(value_) =
          mod_mul(std::get<0>(value_), std::get<0>(other.value_), ring_.modulus());
      break;
    case 1: std::get<1>(value_) *= std::get<1>(other.value_); break;
    default: std::get<2>(value_) *= std::get<2>(other.value_);
  }
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  check_same_ring(a);
  check_same_ring(b);
  switch (value_.index()) {
    case 0: {
      std::int64_t m = ring_.modulus();
      std::int64_t s = std::get<0>(value_) + mod_mul(std::get<0>(a.value_), std::get<0>(b.value_), m);
      if (s >= m) s -= m;
      std::get<0>(value_) = s;
      break;
    }
    case 1: {
      Integer& acc = std::get<1>(value_);
      mpz_addmul(acc.get_mpz_t(), std::get<1>(a.value_).get_mpz_t(),
                 std::get<1>(b.value_).get_mpz_t());
      break;
    }
    default: std::get<2>(value_) += std::get<2>(a.value_) * std::get<2>(b.value_);
  }
}

void Scalar::sub_product(const Scalar& a, const Scalar& b) {
  check_same_ring(a);
  check_same_ring(b);
  switch (value_.index()) {
    case 0: {
      std::int64_t m = ring_.modulus();
      std::int64_t s = std::get<0>(value_) - mod_mul(std::get<0>(a.value_), std::get<0>(b.value_), m);
      if (s < 0) s += m;
      std::get<0>(value_) = s;
      break;
    }
    case 1: {
      Integer& acc = std::get<1>(value_);
      mpz_submul(acc.get_mpz_t(), std::get<1>(a.value_).get_mpz_t(),
                 std::get<1>(b.value_).get_mpz_t());
      break;
    }
    default: std::get<2>(value_) -= std::get<2>(a.value_) * std::get<2>(b.value_);
  }
}

void Scalar::negate() {
  switch (value_.index()) {
    case 0: {
      std::int64_t& r = std::get<0>(value_);
      if (r != 0) r = ring_.modulus() - r;
      break;
    }
    case 1: std::get<1>(value_) = -std::get<1>(value_); break;
    default: std::get<2>(value_) = -std::get<2>(value_);
  }
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  a.check_same_ring(b);
  if (a.ring_.kind() == RingKind::Integers) {
    if (b.is_zero() || a.integer() % b.integer() != 0) {
      throw Error(ErrorCode::NotInvertible,
                  a.to_string() + " is not divisible by " + b.to_string() + " in Z");
    }
    Scalar result = a;
    mpz_divexact(std::get<1>(result.value_).get_mpz_t(), a.integer().get_mpz_t(),
                 b.integer().get_mpz_t());
    return result;
  }
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.ring_ != b.ring_) return false;
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0: return std::to_string(std::get<0>(value_));
    case 1: return std::get<1>(value_).get_str();
    default: return std::get<2>(value_).get_str();
  }
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Vector zero_vector(const RingSpec& ring, std::size_t n) { return Vector(n, Scalar::zero(ring)); }

Vector unit_vector(const RingSpec& ring, std::size_t n, std::size_t i) {
  Vector v = zero_vector(ring, n);
  v.at(i) = Scalar::one(ring);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool has_canonical_map(const RingSpec& source, const RingSpec& target) {
  if (source == target) return true;
  switch (source.kind()) {
    case RingKind::Integers: return true;
    case RingKind::Rationals: return false;
    case RingKind::PrimeField:
      return target.is_modular() && target.modulus() == source.modulus();
    case RingKind::IntegersMod:
      return target.is_modular() && source.modulus() % target.modulus() == 0;
  }
  return false;
}

Scalar reduce(const Scalar& value, const RingSpec& target) {
  const RingSpec& source = value.ring();
  if (source == target) return value;
  if (!has_canonical_map(source, target)) {
    throw Error(ErrorCode::NoCanonicalMap,
                "no canonical map " + source.to_string() + " -> " + target.to_string());
  }
  if (source.kind() == RingKind::Integers) return Scalar(target, value.integer());
  return Scalar(target, Integer(static_cast<long>(value.residue())));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::int64_t f = 5; f <= n / f; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> primes;
  if (n < 0) n = -n;
  for (std::int64_t f = 2; f <= n / f; ++f) {
    if (n % f == 0) {
      primes.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_squarefree(std::int64_t n) {
  for (std::int64_t p : prime_factors(n)) {
    if ((n / p) % p == 0) return false;
  }
  return true;
}

}  // namespace cellkit
