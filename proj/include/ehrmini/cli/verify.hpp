#pragma once

#include <string>
#include <vector>

#include "ehrmini/corpus.hpp"

namespace ehrmini::cli {

struct VerifyRow {
  std::string suite;
  std::string subject;
  bool pass = false;
  std::string detail;
};

/// Runs every invariant suite over the corpus: Ehrhart shape and
/// reciprocity, pyramid identity, census totals, the limit theorem, the
/// numerator leading term, brute-force oracle agreement, the sum-product
/// identity and the two inclusion-exclusion decompositions.
std::vector<VerifyRow> run_verification(const std::vector<NamedPolytope>& corpus);

}  // namespace ehrmini::cli
