#include "lsa/catalog.hpp"
#include "lsa/cli.hpp"
#include "lsa/error.hpp"
#include "lsa/extensions.hpp"
#include "lsa/json_io.hpp"

#include <doctest.h>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lsa;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run lsa_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "lsa_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string write_json(const std::string& name, const nlohmann::json& j) { return write(name, j.dump()); }

}  // namespace

TEST_CASE("rational JSON forms") {
  using nlohmann::json;
  CHECK(rational_from_json(json(3)) == 3);
  CHECK(rational_from_json(json("-2/6")) == Rational(-1, 3));
  CHECK(rational_from_json(json{{"num", 1}, {"den", 2}}) == Rational(1, 2));
  CHECK(rational_from_json(json::array({5, -10})) == Rational(-1, 2));
  CHECK(rational_from_json(json{{"num", "123456789012345678901234567890"}, {"den", 1}}) == Rational("123456789012345678901234567890"));
  CHECK_THROWS_AS(rational_from_json(json(0.5)), InputError);
  CHECK_THROWS_AS(rational_from_json(json{{"num", 1}, {"den", 0}}), InputError);
}

TEST_CASE("algebra JSON round trip") {
  for (const auto& en : catalog_lsas()) {
    Algebra a = en.algebra(en.defaults.empty() ? 0 : en.defaults[0]);
    Algebra b = algebra_from_json(parse_json(algebra_to_json(a).dump()));
    CHECK(a == b);
    CHECK(b.name() == a.name());
    CHECK(b.params.size() == a.params.size());
  }
  auto j = parse_json(R"({"dim": 2, "products": [{"i": 1, "j": 2, "k": 2, "num": 1, "den": 1}]})");
  CHECK(algebra_from_json(j) == fixture("N2"));
  CHECK_THROWS_AS(algebra_from_json(parse_json(R"({"dim": 2, "products": [{"i": 3, "j": 1, "k": 1, "num": 1}]})")), InputError);
  CHECK_THROWS_AS(algebra_from_json(parse_json(R"({"products": []})")), InputError);
  CHECK_THROWS_AS(algebra_from_json(parse_json(R"({"dim": 3, "params": {"mu": {"num": 1, "den": 1}}})")), ConstraintError);
  try {
    parse_json("{\"dim\": 3,, }");
    FAIL("parsed");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("byte 11") != std::string::npos);
  }
}

TEST_CASE("extension JSON round trip") {
  ExtensionData d{fixture("N2"), fixture("R0"), BimoduleAction::zero(2, 1), Cocycle2::from_scalar_matrix(QMatrix{{1, 0}, {0, 0}})};
  d.action.lambda[0] = QMatrix{{Rational(1, 2)}};
  ExtensionData r = extension_from_json(parse_json(extension_to_json(d).dump()));
  CHECK(r.K == d.K);
  CHECK(r.V == d.V);
  CHECK(r.action.lambda == d.action.lambda);
  CHECK(r.action.rho == d.action.rho);
  CHECK(r.g == d.g);
  auto no_g = extension_to_json(d);
  no_g.erase("g");
  CHECK_THROWS_AS(extension_from_json(no_g, true), InputError);
  CHECK(extension_from_json(no_g, false).g == Cocycle2::zero(2, 1));
}

TEST_CASE("check command") {
  std::string n30 = write_json("n30.json", algebra_to_json(catalog_entry("N30").algebra()));
  Run r = lsa_run({"check", n30});
  CHECK(r.code == 0);
  CHECK(r.out.find("left-symmetric: yes; complete: yes; N D S: yes yes yes") == 0);

  std::string idem = write("idem.json", R"({"dim": 1, "products": [{"i": 1, "j": 1, "k": 1, "num": 1, "den": 1}]})");
  Run bad = lsa_run({"check", idem});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("complete: no") != std::string::npos);

  Run js = lsa_run({"check", n30, "--json"});
  CHECK(js.code == 0);
  auto j = parse_json(js.out);
  CHECK(j["complete"]["pass"] == true);
  CHECK(j["N"]["pass"] == true);

  Run malformed = lsa_run({"check", write("bad.json", "{\"dim\": 3,")});
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find("byte") != std::string::npos);

  Run mu = lsa_run({"check", write("mu.json", R"({"dim": 3, "params": {"mu": {"num": 1, "den": 1}}})")});
  CHECK(mu.code == 2);
  CHECK(mu.err.find("0 < |mu| < 1") != std::string::npos);

  CHECK(lsa_run({"check", "/nonexistent/file.json"}).code == 2);
  CHECK(lsa_run({}).code == 2);
  CHECK(lsa_run({"frobnicate"}).code == 2);
  CHECK(lsa_run({"--help"}).code == 0);
}

TEST_CASE("lie, identify and ideals commands") {
  std::string e31 = write_json("e31.json", algebra_to_json(catalog_entry("E31zeta").algebra(1)));
  Run lie = lsa_run({"lie", e31});
  CHECK(lie.code == 0);
  CHECK(lie.out.find("[e1, e2] = e2 + e3") != std::string::npos);
  CHECK(lie.out.find("[e1, e3] = -e2 + e3") != std::string::npos);
  CHECK(lie.out.find("G35(zeta=1)") != std::string::npos);

  Run id = lsa_run({"identify", e31, "--json"});
  CHECK(id.code == 0);
  auto j = parse_json(id.out);
  CHECK(j["tag"] == "G35(zeta=1)");
  CHECK(j["milnor"]["detD"] == "2");

  std::string g32 = write_json("g32.json", algebra_to_json(catalog_lie_algebras()[1].build(0)));
  Run as_lie = lsa_run({"identify", "--as-lie", g32});
  CHECK(as_lie.code == 0);
  CHECK(as_lie.out.find("tag: G32") != std::string::npos);
  std::string n31 = write_json("n31.json", algebra_to_json(catalog_entry("N31").algebra()));
  CHECK(lsa_run({"identify", "--as-lie", n31}).code == 2);

  std::string a1 = write_json("a1.json", algebra_to_json(fixture("A1inv")));
  Run uni = lsa_run({"identify", a1});
  CHECK(uni.code == 0);
  CHECK(uni.out.find("NotInScope") != std::string::npos);

  Run ideals = lsa_run({"ideals", write_json("n30i.json", algebra_to_json(catalog_entry("N30").algebra())), "--json"});
  CHECK(ideals.code == 0);
  CHECK(parse_json(ideals.out)["ideals"].size() >= 3);
}

TEST_CASE("h2 and extend commands") {
  ExtensionData d{fixture("N2"), fixture("R0"), BimoduleAction::zero(2, 1), Cocycle2::from_scalar_matrix(QMatrix{{1, 0}, {0, 0}})};
  auto j = extension_to_json(d);
  std::string full = write_json("n2ext.json", j);
  Run ext = lsa_run({"extend", full});
  CHECK(ext.code == 0);
  Algebra built = algebra_from_json(parse_json(ext.out));
  CHECK(built == catalog_entry("N31").algebra());

  j.erase("g");
  Run h = lsa_run({"h2", write_json("n2act.json", j), "--json"});
  CHECK(h.code == 0);
  auto hj = parse_json(h.out);
  CHECK(hj["dim_H2"] == 1);
  CHECK(hj["dim_Z2"] == 2);
  CHECK(hj["dim_B2"] == 1);
  Run ht = lsa_run({"h2", write_json("n2act.json", j)});
  CHECK(ht.out.find("dim H2 = 1") != std::string::npos);

  ExtensionData bad = d;
  bad.action.lambda[1] = QMatrix{{1}};
  Run fail = lsa_run({"extend", write_json("bad_ext.json", extension_to_json(bad))});
  CHECK(fail.code == 1);
  CHECK(fail.err.find("condition") != std::string::npos);
}

TEST_CASE("suite commands") {
  Run c = lsa_run({"catalog-verify", "--json", "--seed", "7", "--samples", "2"});
  CHECK(c.code == 0);
  auto j = parse_json(c.out);
  CHECK(j["summary"]["entries"] == 11);
  CHECK(j["summary"]["pass"] == true);
  CHECK(lsa_run({"catalog-verify", "--json", "--seed", "7", "--samples", "2"}).out == c.out);

  Run s = lsa_run({"affine-sample", "--family", "GD31mu", "--params", "mu=1/2", "--point", "0.5,1,-1", "--point", "0,0,0",
                   "--json", "--samples", "10"});
  CHECK(s.code == 0);
  auto sj = parse_json(s.out);
  for (const char* key : {"family", "samples", "max_closure_residual", "jacobian_min_abs_det", "newton_failures",
                          "tangent_bracket_residual"})
    CHECK_MESSAGE(sj.contains(key), key);
  CHECK(sj["elements"].size() == 2);
  CHECK(sj["elements"][1]["translation"][0] == 0.0);

  CHECK(lsa_run({"affine-sample", "--family", "GD31mu", "--params", "mu=1"}).code == 2);
  CHECK(lsa_run({"affine-sample", "--family", "GD31mu", "--params", "zeta=1"}).code == 2);
  CHECK(lsa_run({"affine-sample", "--family", "GA30", "--point", "1,2"}).code == 2);
  CHECK(lsa_run({"affine-sample", "--family", "GD32", "--samples", "5"}).code == 1);

  Run a = lsa_run({"affine-verify", "--json", "--seed", "7", "--samples", "5"});
  CHECK(a.code == 1);  // only the printed D32 family fails
  auto aj = parse_json(a.out);
  CHECK(aj["summary"]["failed"] == 1);
  for (const auto& f : aj["families"]) CHECK((f["pass"] == true || f["family"] == "GD32"));
}
