#pragma once

#include "lsa/algebra.hpp"

#include <vector>

namespace lsa {

/// {x : x y = y x = 0 for all y}
Subspace center(const Algebra& a);

bool is_two_sided_ideal(const Algebra& a, const Subspace& w);

/// Proper nonzero two-sided ideals with rational data: lines spanned by common
/// eigenvectors of {L_ei, R_ei}, and hyperplanes annihilated by common eigenvectors of
/// the transposes. When a common eigenspace has dimension >= 2 only its echelon basis
/// lines (and the eigenspace itself) are reported. An empty result means "no rational
/// ideal found", nothing more.
std::vector<Subspace> find_ideals_dim_le3(const Algebra& a);

}  // namespace lsa
