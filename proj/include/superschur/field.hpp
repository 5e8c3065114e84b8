#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace superschur {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact coefficient field, selected at runtime: the rationals (characteristic
/// 0) or a prime field GF(p) for an odd prime p < 2^31.  Characteristic 2 is
/// excluded everywhere.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field gf(std::uint32_t p);
  /// 0 -> rationals, odd prime -> GF(p), anything else -> invalid_argument.
  static Field of_characteristic(std::uint32_t c);

  std::uint32_t characteristic() const { return char_; }
  bool is_rational() const { return char_ == 0; }
  bool operator==(const Field&) const = default;

  std::string name() const;

 private:
  explicit Field(std::uint32_t c) : char_(c) {}
  std::uint32_t char_;
};

/// An exact field element: a canonical residue in [0, p) over GF(p), or a
/// reduced fraction with positive denominator over the rationals.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}
  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return of_int(f, 1); }
  static Scalar of_int(const Field& f, long long v);
  static Scalar of_rational(BigRational q);
  /// Parse the serialized form: "a/b" or "a" over Q, a decimal residue mod p.
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical serialized form; parses back to an equal value.
  std::string str() const;

  /// Residue in [0, p); only valid over GF(p).
  std::int64_t residue() const;
  /// Reduced fraction; only valid over the rationals.
  const BigRational& rational() const;

 private:
  explicit Scalar(const Field& f) : field_(f) {}
  void check_same_field(const Scalar& o) const;

  Field field_;
  std::int64_t res_ = 0;  // GF(p) canonical residue
  BigRational rat_;       // rational value
};

inline Scalar operator*(long long c, const Scalar& s) {
  return Scalar::of_int(s.field(), c) * s;
}

}  // namespace superschur
