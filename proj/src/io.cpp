#include "bandinv/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bandinv/error.hpp"

namespace bandinv::io {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, res.ptr);
  if (std::isfinite(v) && s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

namespace {

json parse_doc(const std::string& text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw ParseError("top level must be an object");
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

const json& field(const json& obj, const char* name) {
  const auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

std::size_t count(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_number_unsigned()) throw ParseError(std::string("'") + name + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

double number(const json& v, const std::string& what) {
  if (!v.is_number()) throw ParseError(what + " must be a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& v, const std::string& what) {
  if (!v.is_array()) throw ParseError(what + " must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

// The library throws Error for semantic problems; while loading a file those
// are reported as parse failures.
template <class F>
auto build(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string finish(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

BandMatrix parse_matrix(const std::string& text) {
  const json doc = parse_doc(text);
  const std::size_t n = count(doc, "n");
  const std::size_t big_n = count(doc, "N");
  const json& d = field(doc, "diags");
  if (!d.is_array() || d.size() != n + 1) throw ParseError("'diags' must hold n+1 arrays");
  std::vector<std::vector<double>> diags;
  for (std::size_t j = 0; j <= n; ++j) {
    diags.push_back(numbers(d[j], "diags[" + std::to_string(j) + "]"));
    const std::size_t want = big_n > j ? big_n - j : 0;
    if (diags.back().size() != want)
      throw ParseError("diags[" + std::to_string(j) + "] must have length " + std::to_string(want));
  }
  return build([&] { return BandMatrix(n, std::move(diags)); });
}

SpectralFunction parse_sigma(const std::string& text) {
  const json doc = parse_doc(text);
  const std::size_t n = count(doc, "n");
  const std::size_t big_n = count(doc, "N");
  const json& js = field(doc, "jumps");
  if (!js.is_array()) throw ParseError("'jumps' must be an array");
  std::vector<Jump> jumps;
  for (std::size_t k = 0; k < js.size(); ++k) {
    const std::string where = "jumps[" + std::to_string(k) + "]";
    if (!js[k].is_object()) throw ParseError(where + " must be an object");
    jumps.push_back({number(field(js[k], "x"), where + ".x"), numbers(field(js[k], "alpha"), where + ".alpha")});
  }
  return build([&] { return SpectralFunction(n, big_n, std::move(jumps)); });
}

TriangularInit parse_tinit(const std::string& text) {
  const json doc = parse_doc(text);
  const std::size_t n = count(doc, "n");
  const json& rows = field(doc, "t");
  if (!rows.is_array() || rows.size() != n) throw ParseError("'t' must hold n rows");
  DenseMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = numbers(rows[i], "t[" + std::to_string(i) + "]");
    if (row.size() != n) throw ParseError("every row of 't' needs n entries");
    for (std::size_t j = 0; j < n; ++j) t(i, j) = row[j];
  }
  return build([&] { return TriangularInit(std::move(t)); });
}

SpringChain parse_chain(const std::string& text) {
  const json doc = parse_doc(text);
  SpringChain c{numbers(field(doc, "masses"), "masses"), numbers(field(doc, "k"), "k"), numbers(field(doc, "kp"), "kp")};
  if (c.masses.empty()) throw ParseError("'masses' is empty");
  if (c.k.size() != c.masses.size() + 1) throw ParseError("'k' must have N+1 entries");
  if (c.kp.size() != c.masses.size()) throw ParseError("'kp' must have N entries");
  return c;
}

std::string dump_matrix(const BandMatrix& a) {
  json doc;
  doc["n"] = a.half_bandwidth();
  doc["N"] = a.dim();
  doc["diags"] = a.diagonals();
  return finish(doc);
}

std::string dump_sigma(const SpectralFunction& sigma) {
  json doc;
  doc["n"] = sigma.n();
  doc["N"] = sigma.dim();
  json jumps = json::array();
  for (const Jump& j : sigma.jumps()) {
    json e;
    e["x"] = j.x;
    e["alpha"] = j.alpha;
    jumps.push_back(std::move(e));
  }
  doc["jumps"] = std::move(jumps);
  return finish(doc);
}

std::string dump_tinit(const TriangularInit& t) {
  json doc;
  doc["n"] = t.dim();
  json rows = json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    std::vector<double> row(t.dim());
    for (std::size_t j = 0; j < t.dim(); ++j) row[j] = t(i, j);
    rows.push_back(row);
  }
  doc["t"] = std::move(rows);
  return finish(doc);
}

std::string dump_chain(const SpringChain& c) {
  json doc;
  doc["masses"] = c.masses;
  doc["k"] = c.k;
  doc["kp"] = c.kp;
  return finish(doc);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw ParseError("cannot write " + path.string());
}

}  // namespace bandinv::io
