#include "lsa/catalog.hpp"

#include "lsa/error.hpp"

#include <algorithm>

namespace lsa {

void check_param_constraint(const std::string& name, const Rational& v) {
  bool ok = true;
  if (name == "t") ok = v != 1;
  else if (name == "mu") ok = v != 0 && abs(v) < 1;
  else if (name == "zeta") ok = v > 0;
  else throw InputError("unknown parameter '" + name + "'");
  if (!ok)
    throw ConstraintError("parameter " + name + " = " + to_string(v) + " violates constraint " +
                          param_constraint_text(name));
}

std::string param_constraint_text(const std::string& name) {
  if (name == "t") return "t != 1";
  if (name == "mu") return "0 < |mu| < 1";
  if (name == "zeta") return "zeta > 0";
  return "";
}

std::string to_string(const Flags& f) {
  std::string s;
  auto add = [&](bool b, const char* x) {
    if (!b) return;
    if (!s.empty()) s += ", ";
    s += x;
  };
  add(f.N, "N");
  add(f.D, "D");
  add(f.S, "S");
  return s.empty() ? "-" : s;
}

Algebra CatalogEntry::algebra(const Rational& p) const {
  if (parametrized()) check_param_constraint(param_name, p);
  Algebra a = build(p);
  a.set_name(name);
  if (parametrized()) a.params[param_name] = ParamBinding{p, param_constraint_text(param_name)};
  return a;
}

LieTag CatalogEntry::claimed_tag(const Rational& p) const {
  LieTag t;
  t.kind = claimed_lie;
  if (claimed_lie == LieTag::Kind::G34) {
    t.exact_param = name == "D32" ? Rational(1, 2) : p;
  } else if (claimed_lie == LieTag::Kind::G35) {
    t.exact_param = p;
  }
  if (t.exact_param) t.param = to_double(*t.exact_param);
  return t;
}

Rational CatalogEntry::sample_param(Rng& rng) const {
  for (;;) {
    Rational p;
    if (param_name == "t") p = rng.rational(6);
    else if (param_name == "mu") p = Rational(rng.integer(-8, 8), rng.integer(9, 12));
    else if (param_name == "zeta") p = Rational(rng.integer(1, 12), rng.integer(1, 6));
    else return 0;
    p.canonicalize();
    try {
      check_param_constraint(param_name, p);
      return p;
    } catch (const ConstraintError&) {
    }
  }
}

namespace {

using K = LieTag::Kind;

CatalogEntry entry(std::string name, std::string param, std::vector<Rational> defaults, Flags f, K lie,
                   std::function<Algebra(const Rational&)> build) {
  CatalogEntry e;
  e.name = std::move(name);
  e.param_name = std::move(param);
  e.defaults = std::move(defaults);
  e.claimed_flags = f;
  e.claimed_lie = lie;
  e.build = std::move(build);
  return e;
}

// D32 in the form produced by extending R0 by A2ii; the printed row is d32_table_row().
Algebra d32_derived() {
  return make_algebra(3, {{1, 2, {0, 1, 0}}, {1, 3, {0, 0, Rational(1, 2)}}, {3, 3, {0, 1, 0}}});
}

}  // namespace

Algebra d32_table_row() {
  return make_algebra(3, {{1, 2, {0, 1, 0}}, {1, 3, {0, 0, Rational(1, 2)}}, {2, 2, {1, 0, 0}}},
                      "D32(table row)");
}

const std::vector<CatalogEntry>& catalog_lsas() {
  static const std::vector<CatalogEntry> entries = [] {
    const Flags NDS{true, true, true}, S{false, false, true}, D{false, true, false}, N{true, false, false};
    std::vector<CatalogEntry> v;
    v.push_back(entry("N30", "", {}, NDS, K::G31, [](const Rational&) {
      return make_algebra(3, {{1, 2, {0, 1, 0}}});
    }));
    v.push_back(entry("N31", "", {}, NDS, K::G31, [](const Rational&) {
      return make_algebra(3, {{1, 1, {0, 0, 1}}, {1, 2, {0, 1, 0}}});
    }));
    v.push_back(entry("N32", "", {}, S, K::G31, [](const Rational&) {
      return make_algebra(3, {{1, 2, {0, 1, 0}}, {3, 3, {1, 0, 0}}});
    }));
    v.push_back(entry("N33", "", {}, S, K::G31, [](const Rational&) {
      return make_algebra(3, {{1, 2, {0, 1, 0}}, {3, 3, {-1, 0, 0}}});
    }));
    v.push_back(entry("B30", "", {}, NDS, K::G32, [](const Rational&) {
      return make_algebra(3, {{1, 2, {0, 1, 0}}, {1, 3, {0, 0, 1}}});
    }));
    v.push_back(entry("B31", "", {}, D, K::G32, [](const Rational&) {
      return make_algebra(3, {{1, 2, {0, 1, 1}}, {2, 1, {0, 0, 1}}, {1, 3, {0, 0, 1}}});
    }));
    v.push_back(entry("C31", "", {}, NDS, K::G33, [](const Rational&) {
      return make_algebra(3, {{1, 2, {0, 1, 1}}, {1, 3, {0, 0, 1}}});
    }));
    v.push_back(entry("C3t", "t", {Rational(2)}, D, K::G33, [](const Rational& t) {
      return make_algebra(3, {{1, 2, {0, 1, t}}, {1, 3, {0, 0, 1}}, {2, 1, {0, 0, t - 1}}});
    }));
    v.push_back(entry("D31mu", "mu", {Rational(1, 2), Rational(-1, 2)}, NDS, K::G34, [](const Rational& mu) {
      return make_algebra(3, {{1, 2, {0, 1, 0}}, {1, 3, {0, 0, mu}}});
    }));
    v.push_back(entry("D32", "", {}, N, K::G34, [](const Rational&) { return d32_derived(); }));
    v.push_back(entry("E31zeta", "zeta", {Rational(1)}, NDS, K::G35, [](const Rational& z) {
      return make_algebra(3, {{1, 2, {0, 1, z}}, {1, 3, {0, -z, 1}}});
    }));
    return v;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_lsas())
    if (e.name == name) return e;
  throw InputError("unknown catalog entry '" + name + "'");
}

const std::vector<LieFamily>& catalog_lie_algebras() {
  static const std::vector<LieFamily> fams = [] {
    std::vector<LieFamily> v;
    v.push_back({"G31", "", {}, K::G31, [](const Rational&) {
                   return make_algebra(3, {{1, 2, {0, 1, 0}}, {2, 1, {0, -1, 0}}}, "G31");
                 }});
    v.push_back({"G32", "", {}, K::G32, [](const Rational&) {
                   return make_algebra(
                       3, {{1, 2, {0, 1, 0}}, {2, 1, {0, -1, 0}}, {1, 3, {0, 0, 1}}, {3, 1, {0, 0, -1}}}, "G32");
                 }});
    v.push_back({"G33", "", {}, K::G33, [](const Rational&) {
                   return make_algebra(
                       3, {{1, 2, {0, 1, 1}}, {2, 1, {0, -1, -1}}, {1, 3, {0, 0, 1}}, {3, 1, {0, 0, -1}}}, "G33");
                 }});
    v.push_back({"G34", "mu", {Rational(1, 2), Rational(-1, 2)}, K::G34, [](const Rational& mu) {
                   return make_algebra(
                       3, {{1, 2, {0, 1, 0}}, {2, 1, {0, -1, 0}}, {1, 3, {0, 0, mu}}, {3, 1, {0, 0, -mu}}}, "G34");
                 }});
    v.push_back({"G35", "zeta", {Rational(1)}, K::G35, [](const Rational& z) {
                   return make_algebra(
                       3, {{1, 2, {0, 1, z}}, {2, 1, {0, -1, -z}}, {1, 3, {0, -z, 1}}, {3, 1, {0, z, -1}}}, "G35");
                 }});
    return v;
  }();
  return fams;
}

Algebra fixture(const std::string& name) {
  if (name == "A1inv")
    return make_algebra(3, {{1, 2, {0, 1, 0}}, {1, 3, {0, 0, -1}}, {2, 3, {1, 0, 0}}, {3, 2, {1, 0, 0}}}, name);
  if (name == "R0") return Algebra(1, name);
  if (name == "R2zero") return Algebra(2, name);
  if (name == "A2ii") return make_algebra(2, {{2, 2, {1, 0}}}, name);
  if (name == "N2") return make_algebra(2, {{1, 2, {0, 1}}}, name);
  if (name == "aff") return make_algebra(2, {{1, 2, {0, 1}}, {2, 1, {0, -1}}}, name);
  throw InputError("unknown fixture '" + name + "'");
}

std::vector<Algebra> fixtures() {
  std::vector<Algebra> v;
  for (const char* n : {"A1inv", "R0", "R2zero", "A2ii", "N2", "aff"}) v.push_back(fixture(n));
  return v;
}

}  // namespace lsa
