#ifndef SUBGAUSS_PROXY_RESULT_HPP
#define SUBGAUSS_PROXY_RESULT_HPP

#include <string_view>

namespace subgauss {

enum class CaseTag {
  AsymmetricFinite,
  SymmetricFinite,
  SemiInfiniteOrUntruncated,
  ExponentialFinite,
};

constexpr std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::AsymmetricFinite:
      return "asymmetric-finite";
    case CaseTag::SymmetricFinite:
      return "symmetric-finite";
    case CaseTag::SemiInfiniteOrUntruncated:
      return "semi-infinite/untruncated";
    case CaseTag::ExponentialFinite:
      return "exponential-finite";
  }
  return "unknown";
}

/// Optimal variance proxy together with the variance and the strictness
/// verdict.  is_strict is decided from the case analysis, not from a
/// floating-point comparison of the two values.
struct ProxyResult {
  double variance_proxy;
  double variance;
  bool is_strict;
  CaseTag case_tag;
};

}  // namespace subgauss

#endif  // SUBGAUSS_PROXY_RESULT_HPP
