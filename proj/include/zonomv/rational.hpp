#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zonomv {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper around GMP's mpq_class. Every constructor and every
/// arithmetic result is canonical, so structural equality is numeric equality.
class Rat {
public:
  Rat() = default;
  Rat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rat(long num, long den);
  explicit Rat(const mpz_class& integer) : q_(integer) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class q);

  /// Parses "[+-]digits[/digits]". Throws ParseError on malformed input or a
  /// zero denominator.
  static Rat parse(std::string_view text);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  std::string num_str() const { return q_.get_num().get_str(); }
  std::string den_str() const { return q_.get_den().get_str(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { return Rat(mpq_class(-q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

private:
  mpq_class q_;
};

Rat abs(const Rat& q);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

/// Decimal annotation with the given number of significant digits.
std::string decimal(const Rat& q, int significant_digits = 12);

std::ostream& operator<<(std::ostream& os, const Rat& q);

}  // namespace zonomv
