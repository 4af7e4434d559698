#include "lsa/json_io.hpp"

#include "lsa/catalog.hpp"
#include "lsa/error.hpp"

#include <fmt/format.h>
#include <fstream>
#include <sstream>

namespace lsa {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(fmt::format("{}: missing key \"{}\"", where, key));
  return j.at(key);
}

std::size_t index(const json& j, const char* key, std::size_t dim, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) throw InputError(fmt::format("{}: \"{}\" must be an integer", where, key));
  long long x = v.get<long long>();
  if (x < 1 || static_cast<std::size_t>(x) > dim)
    throw InputError(fmt::format("{}: \"{}\" = {} outside 1..{}", where, key, x, dim));
  return static_cast<std::size_t>(x - 1);
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) throw InputError("expected an integer, got " + j.get<std::string>());
    return q.get_num();
  }
  throw InputError("expected an integer, got " + j.dump());
}

Rational ratio(const json& num, const json& den) {
  Integer d = integer_from_json(den);
  if (d == 0) throw InputError("zero denominator");
  return make_rational(integer_from_json(num), d);
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("{}: malformed JSON at byte {}: {}", source, e.byte, e.what()));
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_object()) return ratio(field(j, "num", "rational"), j.contains("den") ? j.at("den") : json(1));
  if (j.is_array() && j.size() == 2) return ratio(j[0], j[1]);
  throw InputError("not a rational: " + j.dump());
}

json rational_to_json(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

QVector vector_from_json(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw InputError(fmt::format("expected a vector of length {}: {}", n, j.dump()));
  QVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

json vector_to_json(const QVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

QMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw InputError(fmt::format("expected {} matrix rows: {}", rows, j.dump()));
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    QVector row = vector_from_json(j[r], cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

json matrix_to_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Algebra algebra_from_json(const json& j) {
  const json& d = field(j, "dim", "algebra");
  if (!d.is_number_integer() || d.get<long long>() < 0) throw InputError("algebra: \"dim\" must be a non-negative integer");
  std::size_t n = d.get<std::size_t>();
  Algebra a(n, j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : std::string{});
  if (j.contains("products")) {
    const json& ps = j["products"];
    if (!ps.is_array()) throw InputError("algebra: \"products\" must be an array");
    for (std::size_t p = 0; p < ps.size(); ++p) {
      std::string where = fmt::format("algebra: products[{}]", p);
      std::size_t i = index(ps[p], "i", n, where), jj = index(ps[p], "j", n, where), k = index(ps[p], "k", n, where);
      Rational v = ps[p].contains("value") ? rational_from_json(ps[p]["value"])
                                           : ratio(field(ps[p], "num", where), ps[p].contains("den") ? ps[p]["den"] : json(1));
      a.c(i, jj, k) += v;
    }
  }
  if (j.contains("params")) {
    const json& ps = j["params"];
    if (!ps.is_object()) throw InputError("algebra: \"params\" must be an object");
    for (const auto& [name, value] : ps.items()) {
      Rational v = rational_from_json(value);
      check_param_constraint(name, v);
      a.params[name] = ParamBinding{v, param_constraint_text(name)};
    }
  }
  return a;
}

json algebra_to_json(const Algebra& a) {
  json products = json::array();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& v = a.c(i, j, k);
        if (v == 0) continue;
        products.push_back(
            {{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}});
      }
  json out = {{"dim", n}, {"products", products}};
  if (!a.name().empty()) out["name"] = a.name();
  if (!a.params.empty()) {
    json ps = json::object();
    for (const auto& [name, b] : a.params) ps[name] = rational_to_json(b.value);
    out["params"] = ps;
  }
  return out;
}

ExtensionData extension_from_json(const json& j, bool require_g) {
  ExtensionData d;
  d.K = algebra_from_json(field(j, "K", "extension"));
  d.V = algebra_from_json(field(j, "V", "extension"));
  const std::size_t k = d.K.dim(), v = d.V.dim();
  d.action = BimoduleAction::zero(k, v);
  for (const char* key : {"lambda", "rho"}) {
    if (!j.contains(key)) continue;
    const json& ms = j[key];
    if (!ms.is_array() || ms.size() != k) throw InputError(fmt::format("extension: \"{}\" must list {} matrices", key, k));
    auto& target = std::string(key) == "lambda" ? d.action.lambda : d.action.rho;
    for (std::size_t i = 0; i < k; ++i) target[i] = matrix_from_json(ms[i], v, v);
  }
  d.g = Cocycle2::zero(k, v);
  if (j.contains("g")) {
    const json& g = j["g"];
    if (!g.is_array() || g.size() != k) throw InputError(fmt::format("extension: \"g\" must have {} rows", k));
    for (std::size_t a = 0; a < k; ++a) {
      if (!g[a].is_array() || g[a].size() != k) throw InputError(fmt::format("extension: g[{}] must have {} entries", a, k));
      for (std::size_t b = 0; b < k; ++b) d.g.at(a, b) = vector_from_json(g[a][b], v);
    }
  } else if (require_g) {
    throw InputError("extension: missing key \"g\"");
  }
  return d;
}

json extension_to_json(const ExtensionData& d) {
  json lam = json::array(), rho = json::array(), g = json::array();
  for (const auto& m : d.action.lambda) lam.push_back(matrix_to_json(m));
  for (const auto& m : d.action.rho) rho.push_back(matrix_to_json(m));
  for (std::size_t a = 0; a < d.K.dim(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < d.K.dim(); ++b) row.push_back(vector_to_json(d.g.at(a, b)));
    g.push_back(row);
  }
  return {{"K", algebra_to_json(d.K)}, {"V", algebra_to_json(d.V)}, {"lambda", lam}, {"rho", rho}, {"g", g}};
}

}  // namespace lsa
