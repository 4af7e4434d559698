#pragma once

#include "lsa/extensions.hpp"
#include "lsa/random.hpp"

#include <string>
#include <vector>

namespace lsa {

/// Extension data whose built algebra should be isomorphic to a catalog entry through
/// `witness` (columns: images of the catalog basis, in the extension's coordinates).
struct Reconstruction {
  std::string label;
  std::string target;      // catalog entry name
  Rational target_param;   // t, mu or zeta of the target (0 if none)
  ExtensionData data;
  QMatrix witness;
};

/// Fixed representatives plus `random_samples` seeded draws of the free parameters of
/// each construction.
std::vector<Reconstruction> reconstructions(Rng& rng, std::size_t random_samples);

/// The ideal-aff(R) construction with the basis change exactly as printed
/// (e3 = x0 - d e1 - b e2); fails whenever b != 0.
Reconstruction printed_aff_ideal_witness(const Rational& t, const Rational& b, const Rational& d);

struct ReconstructionResult {
  bool built = false;
  bool iso = false;
  std::string detail;
};

ReconstructionResult check_reconstruction(const Reconstruction& r);

}  // namespace lsa
