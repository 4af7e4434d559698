#pragma once

#include "lsa/algebra.hpp"
#include "lsa/lie.hpp"
#include "lsa/random.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lsa {

/// Throws ConstraintError naming the violated constraint. Known names: t, mu, zeta.
void check_param_constraint(const std::string& name, const Rational& value);
std::string param_constraint_text(const std::string& name);

struct Flags {
  bool N = false, D = false, S = false;
  bool operator==(const Flags&) const = default;
};
std::string to_string(const Flags& f);  // "N, D, S", "D", "-"

struct CatalogEntry {
  std::string name;        // N30 ... E31zeta
  std::string param_name;  // "", "t", "mu", "zeta"
  std::vector<Rational> defaults;
  Flags claimed_flags;
  LieTag::Kind claimed_lie = LieTag::Kind::NotInScope;

  bool parametrized() const { return !param_name.empty(); }
  /// The algebra at parameter p (ignored for unparametrized entries).
  Algebra algebra(const Rational& p = 0) const;
  /// The table's Lie algebra column at parameter p.
  LieTag claimed_tag(const Rational& p = 0) const;
  /// Random parameter satisfying the constraint.
  Rational sample_param(Rng& rng) const;

  std::function<Algebra(const Rational&)> build;
};

/// The eleven classified algebras, sorted as in the table.
const std::vector<CatalogEntry>& catalog_lsas();
const CatalogEntry& catalog_entry(const std::string& name);

/// The printed D32 row (e1e2 = e2, e1e3 = e3/2, e2e2 = e1); not left-symmetric.
Algebra d32_table_row();

struct LieFamily {
  std::string name;  // G31 ... G35
  std::string param_name;
  std::vector<Rational> defaults;
  LieTag::Kind kind;
  std::function<Algebra(const Rational&)> build;
};

const std::vector<LieFamily>& catalog_lie_algebras();

/// Named fixtures: A1inv, R0, R2zero, A2ii (e2e2 = e1), N2, aff.
Algebra fixture(const std::string& name);
std::vector<Algebra> fixtures();

}  // namespace lsa
