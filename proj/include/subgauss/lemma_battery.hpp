#ifndef SUBGAUSS_LEMMA_BATTERY_HPP
#define SUBGAUSS_LEMMA_BATTERY_HPP

#include <string>
#include <vector>

namespace subgauss::lemmas {

struct LemmaCheck {
  std::string name;
  bool pass;
  double worst_margin;  // worst observed margin (sign convention per check)
  std::string detail;
};

enum class LemmaSuiteId { Gaussian, Exponential, Appendix, All };

/// Runs the named grid batteries and returns one entry per lemma, with the
/// worst-case margin over the grid.  grid_n controls the per-axis grid
/// density of the sweeps.
std::vector<LemmaCheck> run_lemma_suite(LemmaSuiteId suite, int grid_n = 200);

}  // namespace subgauss::lemmas

#endif  // SUBGAUSS_LEMMA_BATTERY_HPP
