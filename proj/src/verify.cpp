#include "lsa/verify.hpp"

#include "lsa/completeness.hpp"
#include "lsa/error.hpp"
#include "lsa/extensions.hpp"
#include "lsa/identities.hpp"
#include "lsa/ideals.hpp"
#include "lsa/reconstruction.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <sstream>

namespace lsa {

bool EntryReport::pass() const {
  for (const auto& [k, c] : checks)
    if (c.hard && !c.pass) return false;
  return true;
}

std::size_t VerificationReport::hard_failures() const {
  std::size_t n = 0;
  for (const auto& e : entries)
    for (const auto& [k, c] : e.checks) n += c.hard && !c.pass;
  for (const auto& r : reconstructions) n += !r.pass;
  for (const auto& p : distinctness) n += !p.differs;
  return n;
}

namespace {

std::string verdict_text(const char* label, const Verdict& v) {
  if (v.holds) return fmt::format("{}: yes ({} basis triples)", label, v.triples_checked);
  return fmt::format("{}: no, fails at {}", label, to_string(*v.witness));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string subspace_text(const Subspace& s) {
  std::string out = "span{";
  for (std::size_t i = 0; i < s.basis.size(); ++i) out += (i ? ", " : "") + to_string(s.basis[i]);
  return out + "}";
}

void merge(CheckResult& into, bool pass, const std::string& sample, const std::string& witness, bool first) {
  if (first) into = CheckResult{};
  into.pass = into.pass && pass;
  if (!into.witness.empty()) into.witness += "; ";
  into.witness += sample.empty() ? witness : "[" + sample + "] " + witness;
}

}  // namespace

EntryReport verify_entry(const CatalogEntry& entry, const std::vector<Rational>& params) {
  EntryReport rep;
  rep.name = entry.name;
  std::vector<Rational> ps = params;
  if (!entry.parametrized()) ps = {Rational(0)};
  for (std::size_t s = 0; s < ps.size(); ++s) {
    const Rational& p = ps[s];
    bool first = s == 0;
    std::string label = entry.parametrized() ? entry.param_name + "=" + to_string(p) : "";
    if (entry.parametrized()) rep.samples.push_back(label);
    Algebra a = entry.algebra(p);

    Verdict ls = check_left_symmetric(a);
    merge(rep.checks["left_symmetric"], ls.holds, label, verdict_text("left-symmetric", ls), first);

    auto cw = completeness_witness(a);
    merge(rep.checks["complete"], !cw, label,
          cw ? "R_x not nilpotent at x = " + to_string(*cw)
             : fmt::format("R_x nilpotent on the grid {{0..3}}^3 ({} points)", grid_size(3)),
          first);

    if (!ls.holds) continue;
    LieTag claimed = entry.claimed_tag(p);
    try {
      MilnorForm m = milnor_normal_form(lie_algebra_of(a));
      LieTag got = tag_from_milnor(m);
      merge(rep.checks["lie_tag"], same_tag(got, claimed), label,
            fmt::format("computed {} (det D = {}), claimed {}", to_string(got), to_string(m.detD),
                        to_string(claimed)),
            first);
    } catch (const Error& e) {
      merge(rep.checks["lie_tag"], false, label, std::string("identification failed: ") + e.what(), first);
    }

    Verdict n = check_novikov(a), d = check_derivation(a), sv = check_S(a);
    Flags computed{n.holds, d.holds, sv.holds};
    merge(rep.checks["flag_N"], true, label, verdict_text("N", n), first);
    merge(rep.checks["flag_D"], true, label, verdict_text("D", d), first);
    merge(rep.checks["flag_S"], true, label, verdict_text("S", sv), first);
    bool agree = computed == entry.claimed_flags;
    merge(rep.checks["flags_match"], agree, label,
          fmt::format("computed {}, claimed {}", to_string(computed), to_string(entry.claimed_flags)), first);
    rep.checks["flags_match"].hard = false;

    auto ideals = find_ideals_dim_le3(a);
    std::string list;
    for (const auto& i : ideals) list += (list.empty() ? "" : ", ") + subspace_text(i);
    merge(rep.checks["ideals_found"], !ideals.empty(), label,
          fmt::format("{} ideals: {}", ideals.size(), list.empty() ? "none" : list), first);

    bool prop = true;
    std::string detail;
    for (const auto& i : ideals) {
      bool ri = is_complete(restriction(a, i)), qi = is_complete(quotient(a, i));
      if (!(ri && qi)) {
        prop = false;
        detail += fmt::format("{}: restriction complete {}, quotient complete {}; ", subspace_text(i), yes_no(ri),
                              yes_no(qi));
      }
    }
    merge(rep.checks["completeness_propagation"], prop, label,
          prop ? fmt::format("restriction and quotient complete for all {} ideals", ideals.size()) : detail, first);
  }
  return rep;
}

VerificationReport verify_catalog(const VerifyOptions& opt) {
  VerificationReport rep;
  const auto& cat = catalog_lsas();
  const long ne = static_cast<long>(cat.size());
  rep.entries.resize(cat.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < ne; ++i) {
    const CatalogEntry& e = cat[static_cast<std::size_t>(i)];
    Rng rng(opt.seed * 1000003u + static_cast<std::uint64_t>(i) + 1);
    std::vector<Rational> ps = e.defaults;
    if (e.parametrized())
      for (std::size_t k = 0; k < opt.samples; ++k) ps.push_back(e.sample_param(rng));
    rep.entries[static_cast<std::size_t>(i)] = verify_entry(e, ps);
  }
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const EntryReport& a, const EntryReport& b) { return a.name < b.name; });

  Rng rrng(opt.seed * 7919u + 17);
  auto recs = reconstructions(rrng, opt.samples);
  rep.reconstructions.resize(recs.size());
  const long nr = static_cast<long>(recs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < nr; ++i) {
    const auto& r = recs[static_cast<std::size_t>(i)];
    ReconstructionResult res = check_reconstruction(r);
    rep.reconstructions[static_cast<std::size_t>(i)] = {res.built && res.iso, "-> " + r.target + ": " + res.detail};
  }
  for (const auto& r : recs) rep.reconstruction_labels.push_back(r.label);

  // Pairwise distinctness at representative parameters.
  std::vector<std::pair<std::string, Algebra>> reps;
  for (const auto& e : cat) {
    if (!e.parametrized()) {
      reps.emplace_back(e.name, e.algebra());
      continue;
    }
    std::vector<Rational> ps = e.defaults;
    if (e.param_name == "t") ps = {2, 3, 0, Rational(-1, 2)};
    if (e.param_name == "zeta") ps = {1, 2};
    for (const auto& p : ps) reps.emplace_back(e.name + "(" + e.param_name + "=" + to_string(p) + ")", e.algebra(p));
  }
  std::vector<Fingerprint> fps(reps.size());
  const long nf = static_cast<long>(reps.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < nf; ++i) fps[static_cast<std::size_t>(i)] = fingerprint(reps[static_cast<std::size_t>(i)].second);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      rep.distinctness.push_back(
          {reps[i].first, reps[j].first, !(fps[i] == fps[j]), to_string(fps[i]), to_string(fps[j])});

  // Discrepancies against the printed data.
  for (const auto& e : rep.entries) {
    const auto& c = e.checks.at("flags_match");
    if (!c.pass) rep.discrepancies.push_back({e.name, "computed N/D/S flags differ from the table", c.witness});
  }
  {
    Algebra row = d32_table_row();
    Verdict ls = check_left_symmetric(row);
    if (!ls.holds) {
      auto cw = completeness_witness(row);
      rep.discrepancies.push_back(
          {"D32", "printed row e1e2=e2, e1e3=e3/2, e2e2=e1 is not left-symmetric; catalog uses e1e2=e2, e1e3=e3/2, e3e3=e2",
           verdict_text("left-symmetric", ls) + (cw ? "; R_x not nilpotent at x = " + to_string(*cw) : "")});
    }
  }
  {
    Reconstruction pr = printed_aff_ideal_witness(1, Rational(2, 3), Rational(-5, 4));
    ReconstructionResult res = check_reconstruction(pr);
    if (!res.iso)
      rep.discrepancies.push_back({"R0 by N2", "printed basis change e3 = x0 - d e1 - b e2 is not an isomorphism; "
                                               "e3 = x0 - d e1 + b e2 is",
                                   pr.label + ": " + res.detail});
  }
  {
    Algebra n2 = fixture("N2");
    H2Result h = h2(BimoduleAction::zero(2, 1), n2);
    std::string z;
    for (const auto& g : h.Z) z += (z.empty() ? "" : ", ") + to_string(g.flatten());
    if (h.Z.size() != 1)
      rep.discrepancies.push_back(
          {"H2(N2, R0)", "cocycles are not only of the form (g11 0; 0 0); the displayed form holds modulo coboundaries",
           fmt::format("Z2 basis (g11, g12, g21, g22): {}; dim B2 = {}; dim H2 = {}", z, h.B.size(), h.dim)});
  }
  {
    BimoduleAction act = BimoduleAction::zero(2, 1);
    act.lambda[0] = QMatrix{{1}};
    H2Result h = h2(act, fixture("R2zero"));
    if (h.dim == 0)
      rep.discrepancies.push_back(
          {"H2(R2zero, R0), lambda_e1 = 1", "class representative (0 s; 0 0) is a coboundary: H2 = 0",
           fmt::format("dim Z2 = {}, dim B2 = {}", h.Z.size(), h.B.size())});
  }
  return rep;
}

nlohmann::json to_json(const VerificationReport& r) {
  using nlohmann::json;
  json j;
  json entries = json::object();
  for (const auto& e : r.entries) {
    json checks = json::object();
    for (const auto& [k, c] : e.checks) {
      checks[k] = {{"pass", c.pass}, {"witness", c.witness}};
      if (!c.hard) checks[k]["soft"] = true;
    }
    entries[e.name] = {{"samples", e.samples}, {"checks", checks}, {"pass", e.pass()}};
  }
  j["entries"] = entries;
  json recs = json::array();
  for (std::size_t i = 0; i < r.reconstructions.size(); ++i)
    recs.push_back({{"label", r.reconstruction_labels[i]},
                    {"pass", r.reconstructions[i].pass},
                    {"witness", r.reconstructions[i].witness}});
  j["reconstructions"] = recs;
  json dist = json::array();
  for (const auto& p : r.distinctness)
    dist.push_back({{"a", p.a}, {"b", p.b}, {"pass", p.differs}, {"fingerprint_a", p.fingerprint_a},
                    {"fingerprint_b", p.fingerprint_b}});
  j["distinctness"] = dist;
  json disc = json::array();
  for (const auto& d : r.discrepancies)
    disc.push_back({{"subject", d.subject}, {"description", d.description}, {"evidence", d.evidence}});
  j["discrepancies"] = disc;
  j["summary"] = {{"entries", r.entries.size()}, {"hard_failures", r.hard_failures()}, {"pass", r.pass()}};
  return j;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& e : r.entries) {
    os << e.name << ": " << (e.pass() ? "PASS" : "FAIL");
    if (!e.samples.empty()) {
      os << " (";
      for (std::size_t i = 0; i < e.samples.size(); ++i) os << (i ? ", " : "") << e.samples[i];
      os << ")";
    }
    os << '\n';
    for (const auto& [k, c] : e.checks)
      os << "  " << k << ": " << (c.pass ? "pass" : (c.hard ? "FAIL" : "mismatch")) << " - " << c.witness << '\n';
  }
  std::size_t rec_ok = 0;
  for (const auto& c : r.reconstructions) rec_ok += c.pass;
  os << "reconstructions: " << rec_ok << "/" << r.reconstructions.size() << " verified\n";
  for (std::size_t i = 0; i < r.reconstructions.size(); ++i)
    if (!r.reconstructions[i].pass)
      os << "  FAIL " << r.reconstruction_labels[i] << " " << r.reconstructions[i].witness << '\n';
  std::size_t dist_ok = 0;
  for (const auto& p : r.distinctness) dist_ok += p.differs;
  os << "distinct fingerprints: " << dist_ok << "/" << r.distinctness.size() << " pairs\n";
  for (const auto& p : r.distinctness)
    if (!p.differs) os << "  SAME " << p.a << " / " << p.b << ": " << p.fingerprint_a << '\n';
  os << "discrepancies: " << r.discrepancies.size() << '\n';
  for (const auto& d : r.discrepancies) os << "  " << d.subject << ": " << d.description << " [" << d.evidence << "]\n";
  os << "hard failures: " << r.hard_failures() << '\n';
  return os.str();
}

}  // namespace lsa
