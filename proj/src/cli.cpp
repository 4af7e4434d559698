#include "lsa/cli.hpp"

#include "lsa/affine_harness.hpp"
#include "lsa/catalog.hpp"
#include "lsa/completeness.hpp"
#include "lsa/error.hpp"
#include "lsa/extensions.hpp"
#include "lsa/identities.hpp"
#include "lsa/ideals.hpp"
#include "lsa/json_io.hpp"
#include "lsa/lie.hpp"
#include "lsa/verify.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fmt/format.h>
#include <optional>
#include <ostream>

namespace lsa::cli {

using nlohmann::json;

namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;
  std::string file;
  bool as_lie = false;
  std::string family;
  std::vector<std::string> params;
  std::vector<std::string> points;
};

std::string combo(const QVector& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    Rational c = abs(v[k]);
    std::string term = (c == 1 ? "" : to_string(c) + " ") + fmt::format("e{}", k + 1);
    if (s.empty())
      s = (v[k] < 0 ? "-" : "") + term;
    else
      s += (v[k] < 0 ? " - " : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

json verdict_json(const Verdict& v) {
  return {{"pass", v.holds}, {"witness", v.witness ? to_string(*v.witness) : std::string{}}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int do_check(const Options& o, std::ostream& out) {
  Algebra a = algebra_from_json(read_json_file(o.file));
  Verdict ls = check_left_symmetric(a);
  auto cw = completeness_witness(a);
  Verdict n = check_novikov(a), d = check_derivation(a), s = check_S(a);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  if (o.json) {
    emit(out, {{"left_symmetric", verdict_json(ls)},
               {"complete", {{"pass", !cw}, {"witness", cw ? "R_x not nilpotent at x = " + to_string(*cw) : ""}}},
               {"N", verdict_json(n)},
               {"D", verdict_json(d)},
               {"S", verdict_json(s)}});
  } else {
    out << fmt::format("left-symmetric: {}; complete: {}; N D S: {} {} {}\n", yn(ls.holds), yn(!cw), yn(n.holds),
                       yn(d.holds), yn(s.holds));
    if (ls.witness) out << "  left-symmetry fails: " << to_string(*ls.witness) << '\n';
    if (cw) out << "  R_x not nilpotent at x = " << to_string(*cw) << '\n';
  }
  return ls.holds && !cw ? kPass : kFail;
}

json brackets_json(const Algebra& l) {
  json b = json::array();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      if (!is_zero(l.product(i, j))) b.push_back({{"i", i + 1}, {"j", j + 1}, {"value", vector_to_json(l.product(i, j))}});
  return b;
}

void print_brackets(const Algebra& l, std::ostream& out) {
  bool any = false;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      if (!is_zero(l.product(i, j))) {
        out << fmt::format("[e{}, e{}] = {}\n", i + 1, j + 1, combo(l.product(i, j)));
        any = true;
      }
  if (!any) out << "abelian\n";
}

LieTag safe_tag(const Algebra& l) {
  try {
    return identify_lie_algebra(l);
  } catch (const NotInScopeError& e) {
    LieTag t;
    t.reason = e.what();
    return t;
  }
}

int do_lie(const Options& o, std::ostream& out) {
  Algebra l = lie_algebra_of(algebra_from_json(read_json_file(o.file)));
  LieTag t = safe_tag(l);
  if (o.json) {
    emit(out, {{"brackets", brackets_json(l)}, {"unimodular", is_unimodular(l)}, {"tag", to_string(t)}});
  } else {
    print_brackets(l, out);
    out << "tag: " << to_string(t) << '\n';
  }
  return kPass;
}

int do_identify(const Options& o, std::ostream& out) {
  Algebra a = algebra_from_json(read_json_file(o.file));
  Algebra l = a;
  if (o.as_lie)
    require_lie(l);
  else
    l = lie_algebra_of(a);
  std::optional<MilnorForm> m;
  LieTag t;
  try {
    m = milnor_normal_form(l);
    t = tag_from_milnor(*m);
  } catch (const NotInScopeError& e) {
    t.reason = e.what();
  }
  if (o.json) {
    json j = {{"tag", to_string(t)}};
    if (m) {
      json basis = json::array();
      for (const auto& v : m->adapted_basis) basis.push_back(vector_to_json(v));
      j["milnor"] = {{"D", matrix_to_json(m->D)}, {"adapted_basis", basis}, {"detD", to_string(m->detD)}};
    }
    emit(out, j);
  } else {
    if (m) {
      out << "adapted basis: ";
      for (std::size_t i = 0; i < m->adapted_basis.size(); ++i)
        out << (i ? ", " : "") << to_string(m->adapted_basis[i]);
      out << "\nD = " << to_string(m->D) << "\ndet D = " << to_string(m->detD) << '\n';
    }
    out << "tag: " << to_string(t) << '\n';
  }
  return kPass;
}

json cocycle_json(const Cocycle2& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.K_dim; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.K_dim; ++j) row.push_back(vector_to_json(g.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string cocycle_text(const Cocycle2& g) {
  std::string s;
  for (std::size_t i = 0; i < g.K_dim; ++i)
    for (std::size_t j = 0; j < g.K_dim; ++j)
      if (!is_zero(g.at(i, j))) s += fmt::format("{}g(e{}, e{}) = {}", s.empty() ? "" : ", ", i + 1, j + 1, to_string(g.at(i, j)));
  return s.empty() ? "0" : s;
}

int do_h2(const Options& o, std::ostream& out) {
  ExtensionData d = extension_from_json(read_json_file(o.file), false);
  d.action.validate();
  H2Result r = h2(d.action, d.K);
  if (o.json) {
    json reps = json::array();
    for (const auto& g : r.representatives) reps.push_back(cocycle_json(g));
    emit(out, {{"dim_Z2", r.Z.size()},
               {"dim_B2", r.B.size()},
               {"dim_H2", r.dim},
               {"coboundaries_closed", r.coboundaries_closed},
               {"representatives", reps}});
  } else {
    out << fmt::format("dim Z2 = {}; dim B2 = {}; dim H2 = {}\n", r.Z.size(), r.B.size(), r.dim);
    for (const auto& g : r.representatives) out << "  " << cocycle_text(g) << '\n';
    if (!r.coboundaries_closed) out << "coboundaries are not cocycles: (lambda, rho) is not a bimodule\n";
  }
  return r.coboundaries_closed ? kPass : kFail;
}

int do_extend(const Options& o, std::ostream& out, std::ostream& err) {
  ExtensionData d = extension_from_json(read_json_file(o.file), true);
  try {
    Algebra a = build_extension(d);
    emit(out, algebra_to_json(a));
    return kPass;
  } catch (const ExtensionConditionError& e) {
    err << "extension condition " << e.condition() << " fails: " << e.what() << '\n';
    return kFail;
  }
}

int do_ideals(const Options& o, std::ostream& out) {
  Algebra a = algebra_from_json(read_json_file(o.file));
  auto ideals = find_ideals_dim_le3(a);
  if (o.json) {
    json list = json::array();
    for (const auto& w : ideals) {
      json basis = json::array();
      for (const auto& v : w.basis) basis.push_back(vector_to_json(v));
      list.push_back({{"dim", w.dim()}, {"basis", basis}});
    }
    emit(out, {{"ideals", list}});
  } else {
    if (ideals.empty()) out << "no rational ideal found\n";
    for (const auto& w : ideals) {
      out << "span{";
      for (std::size_t i = 0; i < w.basis.size(); ++i) out << (i ? ", " : "") << combo(w.basis[i]);
      out << "}\n";
    }
  }
  return kPass;
}

int do_catalog_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.seed = o.seed;
  if (o.samples) vo.samples = *o.samples;
  VerificationReport r = verify_catalog(vo);
  if (o.json)
    emit(out, to_json(r));
  else
    out << to_text(r);
  return r.pass() ? kPass : kFail;
}

int do_affine_verify(const Options& o, std::ostream& out) {
  AffineReport r = verify_affine(o.seed, o.samples.value_or(50));
  if (o.json)
    emit(out, to_json(r));
  else
    out << to_text(r);
  return r.pass() ? kPass : kFail;
}

Vec3 parse_point(const std::string& s) {
  std::vector<double> xs;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    try {
      std::size_t used = 0;
      xs.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError(fmt::format("--point {}: \"{}\" is not a number", s, tok));
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (xs.size() != 3) throw InputError(fmt::format("--point {}: expected a,b,c", s));
  return Vec3(xs[0], xs[1], xs[2]);
}

json map_json(const AffineMap3& m) {
  json lin = json::array();
  for (int r = 0; r < 3; ++r) lin.push_back({m.linear(r, 0), m.linear(r, 1), m.linear(r, 2)});
  return {{"linear", lin}, {"translation", {m.translation(0), m.translation(1), m.translation(2)}}};
}

int do_affine_sample(const Options& o, std::ostream& out) {
  std::optional<Rational> p;
  std::string pname;
  for (const auto& kv : o.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw InputError("--params expects name=value, got " + kv);
    pname = kv.substr(0, eq);
    p = parse_rational(kv.substr(eq + 1));
  }
  GroupFamily probe = make_group_family(o.family);
  if (p && pname != probe.param_name)
    throw InputError(fmt::format("family {} has {} parameter, got \"{}\"", probe.name,
                                 probe.param_name.empty() ? "no" : "a \"" + probe.param_name + "\"", pname));
  GroupFamily fam = make_group_family(o.family, p);
  Algebra paired = catalog_entry(fam.entry).algebra(fam.exact_param);

  std::vector<Vec3> pts;
  for (const auto& s : o.points) pts.push_back(parse_point(s));
  FamilyReport rep = verify_family(fam, paired, o.seed, o.samples.value_or(50));

  if (o.json) {
    json elems = json::array();
    for (const auto& q : pts) {
      json e = map_json(fam.element(q(0), q(1), q(2)));
      e["point"] = {q(0), q(1), q(2)};
      elems.push_back(e);
    }
    emit(out, {{"family", fam.name},
               {"param", rep.param},
               {"samples", rep.closure.samples},
               {"max_closure_residual", rep.closure.max_residual},
               {"jacobian_min_abs_det", rep.transitivity.jacobian_min_abs_det},
               {"newton_failures", rep.closure.newton_failures + rep.transitivity.newton_failures},
               {"tangent_bracket_residual", rep.tangent.bracket_residual},
               {"pass", rep.pass()},
               {"elements", elems}});
  } else {
    for (const auto& q : pts) {
      Mat4 h = fam.element(q(0), q(1), q(2)).homogeneous();
      out << fmt::format("{}({}, {}, {}) =\n", fam.name, q(0), q(1), q(2));
      for (int r = 0; r < 4; ++r)
        out << fmt::format("  [{:>14.9g} {:>14.9g} {:>14.9g} {:>14.9g}]\n", h(r, 0), h(r, 1), h(r, 2), h(r, 3));
    }
    out << fmt::format("{} {}: samples {}, closure {:.3e}, min|detJ| {:.3e}, newton failures {}, tangent {:.3e}: {}\n",
                       fam.name, rep.param.empty() ? "-" : rep.param, rep.closure.samples, rep.closure.max_residual,
                       rep.transitivity.jacobian_min_abs_det,
                       rep.closure.newton_failures + rep.transitivity.newton_failures, rep.tangent.bracket_residual,
                       rep.pass() ? "PASS" : "FAIL");
    for (const auto& why : rep.failures()) out << "  " << why << '\n';
  }
  return rep.pass() ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with left-symmetric algebras", "lsa"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_flag("--json", o.json, "JSON reports");
  app.add_option("--seed", o.seed, "seed for randomized sampling");
  app.add_option("--samples", o.samples, "random sample count");

  auto with_file = [&](const char* name, const char* desc) {
    auto* s = app.add_subcommand(name, desc);
    s->add_option("FILE", o.file, "input JSON")->required();
    s->fallthrough();
    return s;
  };
  auto* check = with_file("check", "left-symmetry, completeness and N/D/S");
  auto* lie = with_file("lie", "commutator Lie algebra and its tag");
  auto* h2c = with_file("h2", "second cohomology of an action (extension JSON without g)");
  auto* extend = with_file("extend", "build the extension algebra");
  auto* ideals = with_file("ideals", "two-sided ideals found");
  auto* identify = with_file("identify", "Milnor normal form and tag");
  identify->add_flag("--as-lie", o.as_lie, "FILE is already a Lie bracket table");
  auto* catv = app.add_subcommand("catalog-verify", "verify the classification catalog")->fallthrough();
  auto* affv = app.add_subcommand("affine-verify", "verify the affine group families")->fallthrough();
  auto* affs = app.add_subcommand("affine-sample", "group elements and a sampled report for one family")->fallthrough();
  affs->add_option("--family", o.family, "family or catalog name")->required();
  affs->add_option("--params", o.params, "name=value");
  affs->add_option("--point", o.points, "a,b,c")->allow_extra_args(false);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "lsa: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (check->parsed()) return do_check(o, out);
    if (lie->parsed()) return do_lie(o, out);
    if (h2c->parsed()) return do_h2(o, out);
    if (extend->parsed()) return do_extend(o, out, err);
    if (ideals->parsed()) return do_ideals(o, out);
    if (identify->parsed()) return do_identify(o, out);
    if (catv->parsed()) return do_catalog_verify(o, out);
    if (affv->parsed()) return do_affine_verify(o, out);
    if (affs->parsed()) return do_affine_sample(o, out);
  } catch (const ConstraintError& e) {
    err << "lsa: constraint violated: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "lsa: " << e.what() << '\n';
    return kInputError;
  } catch (const DimensionError& e) {
    err << "lsa: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "lsa: " << e.what() << '\n';
    return kFail;
  }
  return kInputError;
}

}  // namespace lsa::cli
