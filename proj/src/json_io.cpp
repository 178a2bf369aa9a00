#include "opsysdual/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

namespace osd {

namespace {

constexpr double kDiagonalImagTol = 1e-12;

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw InvalidInput(std::string("missing or non-integer \"") + key + "\"");
  }
  return j[key].get<int>();
}

double number_or_throw(const Json& j, const std::string& what) {
  if (!j.is_number()) throw InvalidInput(what + " must be a number");
  return j.get<double>();
}

Complex complex_from_json(const Json& j, const std::string& what) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array()) {
    if (j.size() != 2) {
      throw InvalidInput(what + " array form must be [re, im]");
    }
    return Complex(number_or_throw(j[0], what + " re"),
                   number_or_throw(j[1], what + " im"));
  }
  if (j.is_object()) {
    if (!j.contains("re")) throw InvalidInput(what + " object lacks \"re\"");
    double re = number_or_throw(j["re"], what + " re");
    double im =
        j.contains("im") ? number_or_throw(j["im"], what + " im") : 0.0;
    return Complex(re, im);
  }
  throw InvalidInput(what + " is not a number, [re,im], or {re,im}");
}

}  // namespace

ToleranceRelation graph_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("graph JSON must be an object");
  const int n = require_int(j, "n");
  if (n < 1) throw InvalidInput("\"n\" must be positive");
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw InvalidInput("missing \"edges\" array");
  }

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw InvalidInput("each edge must be a pair of integers");
    }
    int a = e[0].get<int>();
    int b = e[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw IndexOutOfRange("edge [" + std::to_string(a) + "," +
                            std::to_string(b) + "] out of range");
    }
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      throw InvalidInput("duplicate edge [" + std::to_string(a) + "," +
                         std::to_string(b) + "]");
    }
    edges.emplace_back(a, b);
  }
  return ToleranceRelation(n, edges);
}

Json graph_to_json(const ToleranceRelation& r) {
  Json j;
  j["n"] = r.vertex_count();
  Json edges = Json::array();
  for (const auto& [a, b] : r.edges()) edges.push_back(Json::array({a, b}));
  j["edges"] = edges;
  return j;
}

PartialHermitianMatrix partial_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("partial-matrix JSON must be an object");
  const int n = require_int(j, "n");
  if (n < 1) throw InvalidInput("\"n\" must be positive");
  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw InvalidInput("missing \"entries\" array");
  }

  HermitianMatrix values = HermitianMatrix::zero(n);
  std::set<std::pair<int, int>> pairs;
  std::vector<std::pair<int, int>> off_diagonal;
  std::vector<char> diagonal_seen(n, 0);
  for (const Json& e : j["entries"]) {
    if (!e.is_object()) throw InvalidInput("each entry must be an object");
    const int i = require_int(e, "i");
    const int k = require_int(e, "j");
    if (i < 0 || i >= n || k < 0 || k >= n) {
      throw IndexOutOfRange("entry (" + std::to_string(i) + "," +
                            std::to_string(k) + ") out of range");
    }
    if (i > k) {
      throw InvalidInput("entry (" + std::to_string(i) + "," +
                         std::to_string(k) +
                         ") below the diagonal; store the upper triangle");
    }
    if (!pairs.insert({i, k}).second) {
      throw InvalidInput("duplicate entry (" + std::to_string(i) + "," +
                         std::to_string(k) + ")");
    }
    double re = e.contains("re")
                    ? number_or_throw(e["re"], "entry \"re\"")
                    : 0.0;
    double im = e.contains("im")
                    ? number_or_throw(e["im"], "entry \"im\"")
                    : 0.0;
    if (i == k) {
      if (std::abs(im) > kDiagonalImagTol) {
        throw InvalidInput("diagonal entry (" + std::to_string(i) + "," +
                           std::to_string(i) + ") must be real");
      }
      diagonal_seen[i] = 1;
      values.set(i, i, re);
    } else {
      off_diagonal.emplace_back(i, k);
      values.set(i, k, Complex(re, im));
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!diagonal_seen[i]) {
      throw InvalidInput("entries must cover the diagonal; (" +
                         std::to_string(i) + "," + std::to_string(i) +
                         ") missing");
    }
  }

  if (j.contains("graph")) {
    ToleranceRelation r = graph_from_json(j["graph"]);
    if (r.vertex_count() != n) {
      throw DimMismatch("\"graph\" has a different n than the matrix");
    }
    std::set<std::pair<int, int>> given(off_diagonal.begin(),
                                        off_diagonal.end());
    std::set<std::pair<int, int>> expected(r.edges().begin(),
                                           r.edges().end());
    if (given != expected) {
      throw InvalidInput(
          "entries do not match the edge set of the explicit \"graph\"");
    }
    return PartialHermitianMatrix(std::move(r), std::move(values));
  }
  return PartialHermitianMatrix(ToleranceRelation(n, off_diagonal),
                                std::move(values));
}

Json complex_to_json(const Complex& z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

namespace {

Json entries_to_json(const HermitianMatrix& a, const ToleranceRelation* r) {
  Json entries = Json::array();
  for (int i = 0; i < a.dim(); ++i) {
    for (int k = i; k < a.dim(); ++k) {
      if (r != nullptr && !r->related(i, k)) continue;
      Json e;
      e["i"] = i;
      e["j"] = k;
      e["re"] = a(i, k).real();
      e["im"] = a(i, k).imag();
      entries.push_back(std::move(e));
    }
  }
  return entries;
}

}  // namespace

Json partial_to_json(const PartialHermitianMatrix& x) {
  Json j;
  j["n"] = x.dim();
  j["graph"] = graph_to_json(x.pattern());
  j["entries"] = entries_to_json(x.values(), &x.pattern());
  return j;
}

Json hermitian_to_json(const HermitianMatrix& a) {
  Json j;
  j["n"] = a.dim();
  j["entries"] = entries_to_json(a, nullptr);
  return j;
}

std::vector<Complex> vector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("v") || !j["v"].is_array()) {
    throw InvalidInput("vector JSON must be an object with a \"v\" array");
  }
  std::vector<Complex> v;
  for (const Json& e : j["v"]) {
    v.push_back(complex_from_json(e, "vector element"));
  }
  if (v.empty()) throw InvalidInput("vector must be nonempty");
  return v;
}

Json vector_to_json(const std::vector<Complex>& v) {
  Json j;
  Json arr = Json::array();
  for (const Complex& z : v) arr.push_back(complex_to_json(z));
  j["v"] = arr;
  return j;
}

}  // namespace osd
