#pragma once

#include "lsa/algebra.hpp"
#include "lsa/catalog.hpp"

#include <optional>
#include <string>

namespace lsa {

/// Basis-free isomorphism invariants of a 3-dimensional algebra. Different fingerprints
/// certify non-isomorphism; equal ones certify nothing.
struct Fingerprint {
  std::string lie;  // tag with parameter
  std::size_t center_dim = 0;
  std::size_t square_dim = 0;  // dim span{x y}
  Flags flags;
  std::size_t rank_L = 0;  // generic rank of L_x
  std::size_t rank_R = 0;
  // Inertia of q(x, y) = tr ad((x y + y x) / 2).
  std::size_t q_pos = 0, q_neg = 0;
  // Present when U = ker(tr ad) is a two-sided ideal with U U = 0 and e1 is normalized by
  // tr ad_e1 = 2: trace and determinant of L_e1 on U, and kappa with
  // (L_e1|U)_0 = kappa (ad_e1|U)_0 for the traceless parts.
  std::optional<Rational> u_trace, u_det, kappa;
  bool complete = false;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Algebra& a);
std::string to_string(const Fingerprint& f);

/// (positive, negative) counts of a symmetric rational matrix, by congruence.
std::pair<std::size_t, std::size_t> inertia(const QMatrix& s);

}  // namespace lsa
