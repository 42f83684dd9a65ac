#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>

#include "semirep/errors.hpp"

namespace semirep {

// Exact coefficient arithmetic only: arbitrary-precision rationals (GMP)
// for characteristic 0 and residues mod a runtime prime for F_p.

using Rat = mpq_class;

/// "num/den" in lowest terms, sign carried by the numerator.
std::string ratToString(const Rat& x);
/// Canonicalized rational num/den; rejects den == 0.
Rat makeRat(long long num, long long den = 1);

/// Element of F_p with the modulus carried per value.  A default- or
/// int-constructed Fp is an unbound integer literal (modulus 0); it binds to
/// the modulus of the other operand on first mixed operation.  Eigen needs
/// literal Scalar(0)/Scalar(1) to exist before any modulus is known, which is
/// exactly what the unbound state provides.  All matrices built by this
/// library bind their entries at construction, so unbound values never meet
/// each other except as genuine small-integer literals.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(int x) : Fp(static_cast<long long>(x)) {}                  // NOLINT: implicit by design
  Fp(long long x) : v_(static_cast<std::uint64_t>(x)), p_(0) {} // NOLINT
  static Fp make(std::uint64_t p, long long value);

  bool bound() const { return p_ != 0; }
  std::uint64_t modulus() const { return p_; }
  /// Canonical residue in [0, p).  Valid on bound values and on nonnegative
  /// literals (which serialize as themselves).
  std::uint64_t value() const;

  Fp operator-() const;
  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator/(const Fp& a, const Fp& b);
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }
  friend bool operator==(const Fp& a, const Fp& b);
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inverse() const;
  /// Bound copy in F_p; reduces a literal, checks the modulus of a bound value.
  Fp withModulus(std::uint64_t p) const { return bind(p); }

 private:
  // Bound: v_ is the residue in [0, p_).  Unbound (p_ == 0): v_ holds a
  // signed literal in two's complement.
  std::uint64_t v_;
  std::uint64_t p_;

  long long literal() const { return static_cast<long long>(v_); }
  Fp bind(std::uint64_t p) const;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

inline Fp scalarInverse(const Fp& x) { return x.inverse(); }
inline Rat scalarInverse(const Rat& x) {
  if (x == 0) inputError("DivisionByZero", "inverse of 0 in Q");
  return Rat(1) / x;
}

/// Runtime field descriptor: Q or F_p.  The scalar type is chosen at compile
/// time (Rat vs Fp); Field carries the modulus and names the field in I/O.
struct Field {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint64_t p = 0;

  static Field rational() { return Field{Kind::Rational, 0}; }
  static Field prime(std::uint64_t p);  // validates primality

  bool operator==(const Field&) const = default;
  std::string name() const;  // "Q" or "Fp:<p>"
};

bool isPrime(std::uint64_t n);
/// Parses "Q" or "Fp:<prime>"; rejects everything else.
Field parseField(const std::string& text);

/// Uniform scalar construction/printing/randomness over the two scalar types.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static constexpr bool kFinite = false;
  static Rat make(const Field&, long long x) { return Rat(static_cast<long>(x)); }
  static std::string str(const Rat& x) { return ratToString(x); }
  // Small nonzero-biased integers; enough to make random algebra elements
  // singular reasonably often on the module sizes this library targets.
  static Rat randomCoeff(const Field&, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    return Rat(d(rng));
  }
};

template <>
struct FieldOps<Fp> {
  static constexpr bool kFinite = true;
  static Fp make(const Field& f, long long x) { return Fp::make(f.p, x); }
  static std::string str(const Fp& x) { return std::to_string(x.value()); }
  static Fp randomCoeff(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> d(0, f.p - 1);
    return Fp::make(f.p, static_cast<long long>(d(rng)));
  }
};

}  // namespace semirep

namespace Eigen {

template <>
struct NumTraits<semirep::Fp> : GenericNumTraits<semirep::Fp> {
  typedef semirep::Fp Real;
  typedef semirep::Fp NonInteger;
  typedef semirep::Fp Nested;
  static inline semirep::Fp epsilon() { return semirep::Fp(0); }
  static inline semirep::Fp dummy_precision() { return semirep::Fp(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 0,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 4
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline mpq_class epsilon() { return mpq_class(0); }
  static inline mpq_class dummy_precision() { return mpq_class(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 160,
    MulCost = 120
  };
};

}  // namespace Eigen
