#include "superschur/field.hpp"

#include <charconv>

namespace superschur {

namespace {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t q = 3; static_cast<std::uint64_t>(q) * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

// extended Euclid, a in [1, p)
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  return mod_reduce(t, p);
}

}  // namespace

Field Field::gf(std::uint32_t p) {
  if (p == 2) throw std::invalid_argument("characteristic two excluded");
  if (p >= (1u << 31) || !is_odd_prime(p))
    throw std::invalid_argument("characteristic must be 0 or an odd prime < 2^31");
  return Field(p);
}

Field Field::of_characteristic(std::uint32_t c) {
  return c == 0 ? rationals() : gf(c);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(char_) + ")";
}

Scalar Scalar::of_int(const Field& f, long long v) {
  Scalar s(f);
  if (f.is_rational())
    s.rat_ = v;
  else
    s.res_ = mod_reduce(v, f.characteristic());
  return s;
}

Scalar Scalar::of_rational(BigRational q) {
  Scalar s(Field::rationals());
  s.rat_ = std::move(q);
  return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  if (f.is_rational()) {
    Scalar s(f);
    s.rat_ = BigRational(std::string(text));  // accepts "a" and "a/b"
    return s;
  }
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.begin(), text.end(), v);
  if (ec != std::errc() || ptr != text.end())
    throw std::invalid_argument("bad GF(p) scalar: " + std::string(text));
  return of_int(f, v);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch");
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational())
    s.rat_ = -rat_;
  else
    s.res_ = res_ == 0 ? 0 : field_.characteristic() - res_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rational())
    s.rat_ = rat_ + o.rat_;
  else
    s.res_ = mod_reduce(res_ + o.res_, field_.characteristic());
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rational())
    s.rat_ = rat_ * o.rat_;
  else
    s.res_ = mod_reduce(res_ * o.res_, field_.characteristic());
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s(field_);
  if (field_.is_rational())
    s.rat_ = 1 / rat_;
  else
    s.res_ = mod_inverse(res_, field_.characteristic());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
  if (!field_.is_rational()) return std::to_string(res_);
  return rat_.str();
}

std::int64_t Scalar::residue() const {
  if (field_.is_rational()) throw std::logic_error("residue() on a rational");
  return res_;
}

const BigRational& Scalar::rational() const {
  if (!field_.is_rational()) throw std::logic_error("rational() on GF(p)");
  return rat_;
}

}  // namespace superschur
