#include "subgauss/extended_real.hpp"

#include <cmath>
#include <limits>

namespace subgauss {

ExtendedReal::ExtendedReal(double value) {
  if (std::isnan(value)) {
    throw DomainError("ExtendedReal: NaN is not an extended real");
  }
  if (std::isinf(value)) {
    kind_ = value > 0 ? Kind::PosInfinity : Kind::NegInfinity;
    value_ = 0.0;
  } else {
    kind_ = Kind::Finite;
    value_ = value;
  }
}

ExtendedReal ExtendedReal::neg_infinity() {
  return ExtendedReal(Kind::NegInfinity, 0.0);
}

ExtendedReal ExtendedReal::pos_infinity() {
  return ExtendedReal(Kind::PosInfinity, 0.0);
}

double ExtendedReal::finite_value() const {
  if (kind_ != Kind::Finite) {
    throw DomainError("ExtendedReal: infinite endpoint where a finite value is required");
  }
  return value_;
}

double ExtendedReal::as_double() const {
  switch (kind_) {
    case Kind::NegInfinity:
      return -std::numeric_limits<double>::infinity();
    case Kind::PosInfinity:
      return std::numeric_limits<double>::infinity();
    case Kind::Finite:
      break;
  }
  return value_;
}

bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtendedReal::Kind::Finite || a.value_ == b.value_;
}

bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
  return a.as_double() < b.as_double();
}

std::string ExtendedReal::to_string() const {
  switch (kind_) {
    case Kind::NegInfinity:
      return "-inf";
    case Kind::PosInfinity:
      return "+inf";
    case Kind::Finite:
      break;
  }
  return std::to_string(value_);
}

TruncationInterval::TruncationInterval(ExtendedReal lower, ExtendedReal upper)
    : lower_(lower), upper_(upper) {
  if (!(lower < upper)) {
    throw DomainError("TruncationInterval: requires lower < upper (strict)");
  }
}

}  // namespace subgauss
