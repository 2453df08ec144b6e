#ifndef SUBGAUSS_EXTENDED_REAL_HPP
#define SUBGAUSS_EXTENDED_REAL_HPP

#include <string>

#include "subgauss/errors.hpp"

namespace subgauss {

/// A real number extended with -inf and +inf, as a proper sum type.
/// Construction from NaN is rejected; the three kinds are explicit so the
/// truncation theorems can branch on infinite endpoints without sentinel
/// comparisons.
class ExtendedReal {
 public:
  enum class Kind { NegInfinity, Finite, PosInfinity };

  /// Finite or infinite value; throws DomainError on NaN.
  ExtendedReal(double value);  // NOLINT(google-explicit-constructor)

  static ExtendedReal neg_infinity();
  static ExtendedReal pos_infinity();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_infinity() const { return kind_ == Kind::NegInfinity; }
  bool is_pos_infinity() const { return kind_ == Kind::PosInfinity; }

  /// The finite value; throws DomainError if infinite.
  double finite_value() const;

  /// IEEE double view (+-inf for the infinite kinds).
  double as_double() const;

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b);
  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b);

  std::string to_string() const;

 private:
  ExtendedReal(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

bool operator==(const ExtendedReal& a, const ExtendedReal& b);
bool operator<(const ExtendedReal& a, const ExtendedReal& b);

/// An open truncation interval (lower, upper) with lower < upper strictly.
class TruncationInterval {
 public:
  TruncationInterval(ExtendedReal lower, ExtendedReal upper);

  const ExtendedReal& lower() const { return lower_; }
  const ExtendedReal& upper() const { return upper_; }

  bool is_bounded() const { return lower_.is_finite() && upper_.is_finite(); }

 private:
  ExtendedReal lower_;
  ExtendedReal upper_;
};

}  // namespace subgauss

#endif  // SUBGAUSS_EXTENDED_REAL_HPP
