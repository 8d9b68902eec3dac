#pragma once

// Exact scalars. Rationals keep an int64 numerator/denominator and fall back
// to GMP when a value leaves that range, so arithmetic never rounds.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or dimensionally inconsistent input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Violated internal invariant; indicates corrupted data or a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  /// Accepts "a", "-a", "a/b".
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  bool is_small() const { return !big_; }
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

  mpq_class to_mpq() const;
  /// Canonical "a/b" form with b > 0 and gcd(|a|, b) = 1.
  std::string str() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

using Scalar = Rational;

/// The base field: either Q or GF(p). Scalars over GF(p) are stored as
/// integer Rationals in [0, p).
class Field {
 public:
  enum class Kind { rationals, prime };

  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::int64_t p);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  std::int64_t characteristic() const { return kind_ == Kind::rationals ? 0 : p_; }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  /// Maps an arbitrary rational into the field (a/b -> a * b^-1 mod p).
  Scalar from_rational(const Rational& q) const;
  Scalar from_int(long long n) const { return from_rational(Rational(n)); }

  std::string format(const Scalar& a) const;
  Scalar parse(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  std::int64_t mod(__int128 v) const;

  Kind kind_ = Kind::rationals;
  std::int64_t p_ = 0;
};

}  // namespace hopfkit
