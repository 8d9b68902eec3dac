#include "hopfkit/scalar.hpp"

#include <charconv>
#include <limits>

namespace hopfkit {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v >= kMin && v <= kMax; }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool mpz_fits_int64(const mpz_class& z) {
  static const mpz_class lo(std::to_string(kMin));
  static const mpz_class hi(std::to_string(kMax));
  return z >= lo && z <= hi;
}

std::int64_t mpz_to_int64(const mpz_class& z) {
  // mpz_get_si is exact on LP64 when the value fits in a long.
  return static_cast<std::int64_t>(z.get_si());
}

std::int64_t parse_int64(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::out_of_range("int64");
  return v;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  if (mpz_fits_int64(c.get_num()) && mpz_fits_int64(c.get_den())) {
    num_ = mpz_to_int64(c.get_num());
    den_ = mpz_to_int64(c.get_den());
  } else {
    big_ = std::make_shared<const mpq_class>(std::move(c));
  }
}

Rational Rational::from_wide(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(abs128(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  Rational r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  return Rational(mpq_class(to_mpz(n), to_mpz(d)));
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view ns = text.substr(0, slash);
  std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!ns.empty() && ns.front() == '+') ns.remove_prefix(1);
  auto valid = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = s.front() == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!valid(ns) || !valid(ds)) throw InputError("malformed scalar \"" + std::string(text) + "\"");
  if (ds.find_first_not_of("-0") == std::string_view::npos)
    throw InputError("malformed scalar \"" + std::string(text) + "\": zero denominator");
  try {
    return Rational(parse_int64(ns), parse_int64(ds));
  } catch (const std::out_of_range&) {
    mpz_class n{std::string(ns)}, d{std::string(ds)};
    if (d == 0) throw InputError("malformed scalar \"" + std::string(text) + "\": zero denominator");
    return Rational(mpq_class(n, d));
  }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q{mpz_class(to_mpz(num_)), mpz_class(to_mpz(den_))};
  return q;
}

std::string Rational::str() const {
  if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_ || num_ == kMin) return Rational(mpq_class(-to_mpq()));
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits(s)) return Rational(static_cast<long long>(s));
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_wide(n, d);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, 1);
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (!a.big_ && !b.big_)
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
  return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: values fitting in int64 are never stored big
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_)
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

Field Field::prime(std::int64_t p) {
  if (p < 2) throw InputError("GF(p) requires p >= 2");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InputError("GF(p) requires a prime, got " + std::to_string(p));
  if (p > (std::int64_t{1} << 62)) throw UnsupportedError("prime too large");
  Field f;
  f.kind_ = Kind::prime;
  f.p_ = p;
  return f;
}

std::int64_t Field::mod(i128 v) const {
  i128 r = v % p_;
  if (r < 0) r += p_;
  return static_cast<std::int64_t>(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return a + b;
  return Rational(mod(static_cast<i128>(a.small_num()) + b.small_num()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return a - b;
  return Rational(mod(static_cast<i128>(a.small_num()) - b.small_num()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return a * b;
  return Rational(mod(static_cast<i128>(a.small_num()) * b.small_num()));
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::rationals) return -a;
  return Rational(mod(-static_cast<i128>(a.small_num())));
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw DomainError("inverse of zero");
  if (kind_ == Kind::rationals) return Rational(1) / a;
  // Fermat: a^(p-2)
  i128 base = a.small_num(), result = 1;
  std::int64_t e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = (result * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return Rational(static_cast<long long>(result));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return a / b;
  return mul(a, inv(b));
}

Scalar Field::from_rational(const Rational& q) const {
  if (kind_ == Kind::rationals) return q;
  mpq_class v = q.to_mpq();
  mpz_class n = v.get_num() % p_, d = v.get_den() % p_;
  if (d == 0) throw DomainError("denominator divisible by the characteristic");
  Scalar sn(static_cast<long long>(mod(static_cast<i128>(n.get_si()))));
  Scalar sd(static_cast<long long>(mod(static_cast<i128>(d.get_si()))));
  return div(sn, sd);
}

std::string Field::format(const Scalar& a) const {
  if (kind_ == Kind::rationals) return a.str();
  return std::to_string(a.small_num());
}

Scalar Field::parse(std::string_view text) const {
  Rational q = Rational::parse(text);
  if (kind_ == Kind::rationals) return q;
  if (!q.is_integer() || q.sign() < 0 || !(q < Rational(p_)))
    throw InputError("GF(" + std::to_string(p_) + ") scalar must be a residue in [0, p): \"" +
                     std::string(text) + "\"");
  return q;
}

}  // namespace hopfkit
