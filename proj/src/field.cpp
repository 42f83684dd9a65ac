#include "semirep/field.hpp"

#include <ostream>

namespace semirep {

namespace {

constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31);  // keeps products in 64 bits

std::uint64_t reduceSigned(long long x, std::uint64_t p) {
  long long r = x % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

// Extended Euclid: inverse of a mod p, a in [1, p).
std::uint64_t invMod(std::uint64_t a, std::uint64_t p) {
  long long t = 0, newT = 1;
  long long r = static_cast<long long>(p), newR = static_cast<long long>(a);
  while (newR != 0) {
    long long q = r / newR;
    t = std::exchange(newT, t - q * newT);
    r = std::exchange(newR, r - q * newR);
  }
  if (r != 1) internalError("NotInvertible", "gcd(" + std::to_string(a) + ", " + std::to_string(p) + ") != 1");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

std::string ratToString(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat makeRat(long long num, long long den) {
  if (den == 0) inputError("DivisionByZero", "rational with zero denominator");
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

Fp Fp::make(std::uint64_t p, long long value) {
  if (p < 2) internalError("BadModulus", "modulus must be >= 2");
  Fp r;
  r.p_ = p;
  r.v_ = reduceSigned(value, p);
  return r;
}

std::uint64_t Fp::value() const {
  if (p_ == 0 && literal() < 0)
    internalError("UnboundScalar", "negative literal has no canonical residue");
  return v_;
}

Fp Fp::bind(std::uint64_t p) const {
  if (p_ != 0) {
    if (p_ != p) internalError("FieldMismatch", "mixed moduli " + std::to_string(p_) + " and " + std::to_string(p));
    return *this;
  }
  return make(p, literal());
}

Fp Fp::operator-() const {
  if (p_ == 0) return Fp(-literal());
  Fp r = *this;
  r.v_ = v_ == 0 ? 0 : p_ - v_;
  return r;
}

Fp operator+(const Fp& a, const Fp& b) {
  std::uint64_t p = a.p_ != 0 ? a.p_ : b.p_;
  if (p == 0) return Fp(a.literal() + b.literal());
  Fp x = a.bind(p), y = b.bind(p);
  Fp r = x;
  r.v_ = (x.v_ + y.v_) % p;
  return r;
}

Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }

Fp operator*(const Fp& a, const Fp& b) {
  std::uint64_t p = a.p_ != 0 ? a.p_ : b.p_;
  if (p == 0) return Fp(a.literal() * b.literal());
  Fp x = a.bind(p), y = b.bind(p);
  Fp r = x;
  r.v_ = (x.v_ * y.v_) % p;
  return r;
}

Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

Fp Fp::inverse() const {
  if (p_ == 0) {
    if (literal() == 1 || literal() == -1) return *this;
    internalError("UnboundScalar", "inverse of unbound literal " + std::to_string(literal()));
  }
  if (v_ == 0) inputError("DivisionByZero", "inverse of 0 in F_" + std::to_string(p_));
  Fp r = *this;
  r.v_ = invMod(v_, p_);
  return r;
}

bool operator==(const Fp& a, const Fp& b) {
  std::uint64_t p = a.p_ != 0 ? a.p_ : b.p_;
  if (p == 0) return a.literal() == b.literal();
  return a.bind(p).v_ == b.bind(p).v_;
}

std::ostream& operator<<(std::ostream& os, const Fp& x) {
  if (x.bound())
    os << x.value() << " (mod " << x.modulus() << ")";
  else
    os << static_cast<long long>(x.value());
  return os;
}

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!isPrime(p)) inputError("NotPrime", std::to_string(p) + " is not prime");
  if (p >= kMaxModulus) inputError("ModulusTooLarge", "p must be < 2^31");
  return Field{Kind::Prime, p};
}

std::string Field::name() const {
  return kind == Kind::Rational ? "Q" : "Fp:" + std::to_string(p);
}

Field parseField(const std::string& text) {
  if (text == "Q") return Field::rational();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string num = text.substr(3);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      inputError("BadField", "expected Fp:<prime>, got '" + text + "'");
    return Field::prime(std::stoull(num));
  }
  inputError("BadField", "expected Q or Fp:<prime>, got '" + text + "'");
}

}  // namespace semirep
