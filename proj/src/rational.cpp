#include "zonomv/rational.hpp"

#include <cctype>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "zonomv/errors.hpp"

namespace zonomv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_part = body.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rat(num, den);
}

std::string Rat::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat abs(const Rat& q) { return q.sign() < 0 ? -q : q; }
Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

std::string decimal(const Rat& q, int significant_digits) {
  std::ostringstream os;
  os << std::setprecision(significant_digits) << q.to_double();
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rat& q) { return os << q.str(); }

}  // namespace zonomv
