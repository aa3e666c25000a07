#include "bicheb/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <utility>

#include <nlohmann/json.hpp>

#include "bicheb/error.hpp"

namespace bicheb {

namespace {

using nlohmann::json;

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw ValidationError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 0 || v > (1LL << 30))
    throw ValidationError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

double require_real(const json& j, const char* what) {
  if (!j.is_number()) throw ValidationError(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void SparseCoeffs::validate() const {
  domain.validate();
  if (degree_x < 0 || degree_y < 0) throw ValidationError("negative degree");
  if (!(tol >= 0.0) || !std::isfinite(tol))
    throw ValidationError("tol must be finite and nonnegative");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const std::string where = "entry " + std::to_string(i) + " (" +
                              std::to_string(e.row) + ", " +
                              std::to_string(e.col) + ")";
    if (e.row < 0 || e.col < 0 || e.row > degree_x || e.col > degree_y)
      throw ValidationError(where + " lies beyond the declared degrees (" +
                            std::to_string(degree_x) + ", " +
                            std::to_string(degree_y) + ")");
    if (!std::isfinite(e.value) || e.value == 0.0)
      throw ValidationError(where + " must hold a finite nonzero value");
    if (i > 0) {
      const auto& p = entries[i - 1];
      if (std::pair(p.row, p.col) >= std::pair(e.row, e.col))
        throw ValidationError(where + " is out of order or duplicated");
    }
  }
}

SparseCoeffs trim(const Matrix<double>& coeffs, double tol, const Domain2& domain) {
  SparseCoeffs out;
  out.domain = domain;
  out.tol = tol;
  for (std::size_t k = 0; k < coeffs.rows(); ++k) {
    for (std::size_t j = 0; j < coeffs.cols(); ++j) {
      const double v = coeffs(k, j);
      if (v == 0.0 || std::abs(v) < tol) continue;
      out.entries.push_back({static_cast<int>(k), static_cast<int>(j), v});
      out.degree_x = std::max(out.degree_x, static_cast<int>(k));
      out.degree_y = std::max(out.degree_y, static_cast<int>(j));
    }
  }
  return out;
}

SparseCoeffs to_sparse(const Cheb2& c) { return trim(c.coeffs(), c.tol(), c.domain()); }

Cheb2 from_sparse(const SparseCoeffs& s) {
  s.validate();
  Matrix<double> a(s.degree_x + 1, s.degree_y + 1);
  for (const auto& e : s.entries) a(e.row, e.col) = e.value;
  return Cheb2(std::move(a), s.domain, s.tol);
}

std::string to_document(const SparseCoeffs& c) {
  std::string out;
  out += "{\n";
  out += "  \"degree_x\": " + std::to_string(c.degree_x) + ",\n";
  out += "  \"degree_y\": " + std::to_string(c.degree_y) + ",\n";
  out += "  \"domain\": [" + format_real(c.domain.xlo) + ", " +
         format_real(c.domain.xhi) + ", " + format_real(c.domain.ylo) + ", " +
         format_real(c.domain.yhi) + "],\n";
  out += "  \"tol\": " + format_real(c.tol) + ",\n";
  if (c.entries.empty()) {
    out += "  \"entries\": []\n";
  } else {
    out += "  \"entries\": [\n";
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      const auto& e = c.entries[i];
      out += "    [" + std::to_string(e.row) + ", " + std::to_string(e.col) +
             ", " + format_real(e.value) + "]";
      out += i + 1 < c.entries.size() ? ",\n" : "\n";
    }
    out += "  ]\n";
  }
  out += "}\n";
  return out;
}

void save(const SparseCoeffs& c, std::ostream& sink) {
  c.validate();
  sink << to_document(c);
  if (!sink) throw IoError("failed writing coefficient document");
}

SparseCoeffs from_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed coefficient document: ") + e.what(),
                     e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_object()) throw ValidationError("coefficient document must be an object");

  for (const auto& [key, _] : doc.items()) {
    if (key != "degree_x" && key != "degree_y" && key != "domain" &&
        key != "tol" && key != "entries")
      throw ValidationError("unknown key \"" + key + "\"");
  }
  for (const char* key : {"degree_x", "degree_y", "domain", "tol", "entries"})
    if (!doc.contains(key))
      throw ValidationError(std::string("missing key \"") + key + "\"");

  SparseCoeffs out;
  out.degree_x = require_int(doc["degree_x"], "degree_x");
  out.degree_y = require_int(doc["degree_y"], "degree_y");
  const json& dom = doc["domain"];
  if (!dom.is_array() || dom.size() != 4)
    throw ValidationError("domain must be an array of four numbers");
  out.domain = {require_real(dom[0], "domain"), require_real(dom[1], "domain"),
                require_real(dom[2], "domain"), require_real(dom[3], "domain")};
  out.tol = require_real(doc["tol"], "tol");

  const json& entries = doc["entries"];
  if (!entries.is_array()) throw ValidationError("entries must be an array");
  out.entries.reserve(entries.size());
  for (const json& e : entries) {
    if (!e.is_array() || e.size() != 3)
      throw ValidationError("each entry must be [row, col, value]");
    out.entries.push_back({require_int(e[0], "entry row"),
                           require_int(e[1], "entry col"),
                           require_real(e[2], "entry value")});
  }
  out.validate();
  return out;
}

SparseCoeffs load(std::istream& source) {
  std::string text{std::istreambuf_iterator<char>(source), {}};
  if (source.bad()) throw IoError("failed reading coefficient document");
  return from_document(text);
}

void save_file(const SparseCoeffs& c, const std::filesystem::path& path) {
  c.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << to_document(c);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

SparseCoeffs load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return load(in);
}

}  // namespace bicheb
