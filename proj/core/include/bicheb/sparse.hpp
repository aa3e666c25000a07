#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bicheb/cheb2.hpp"
#include "bicheb/domain.hpp"
#include "bicheb/matrix.hpp"

namespace bicheb {

struct SparseEntry {
  int row = 0;
  int col = 0;
  double value = 0.0;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Nonzero coefficients as (row, col, value) triplets in strictly increasing
/// lexicographic (row, col) order. An empty entry list is the zero function.
struct SparseCoeffs {
  int degree_x = 0;
  int degree_y = 0;
  Domain2 domain;
  double tol = 0.0;
  std::vector<SparseEntry> entries;

  /// Throws ValidationError on zero or non-finite values, indices beyond the
  /// declared degrees, unsorted or duplicate entries, or bad metadata.
  void validate() const;

  friend bool operator==(const SparseCoeffs&, const SparseCoeffs&) = default;
};

/// Drops every entry with |value| < tol (and every exact zero), then shrinks
/// the degrees to the largest retained row and column index.
SparseCoeffs trim(const Matrix<double>& coeffs, double tol,
                  const Domain2& domain = {});

/// trim(c.coeffs(), c.tol(), c.domain())
SparseCoeffs to_sparse(const Cheb2& c);

Cheb2 from_sparse(const SparseCoeffs& s);

/// Coefficient document:
///
///   {"degree_x": n, "degree_y": m, "domain": [xlo, xhi, ylo, yhi],
///    "tol": t, "entries": [[i, j, value], ...]}
///
/// Reals are written with 17 significant digits, so a save/load cycle is
/// bitwise exact and the output is byte-stable.
void save(const SparseCoeffs& c, std::ostream& sink);
std::string to_document(const SparseCoeffs& c);

/// Throws ParseError (with byte offset) on malformed text and
/// ValidationError on a well-formed but inconsistent document.
SparseCoeffs load(std::istream& source);
SparseCoeffs from_document(std::string_view text);

/// File wrappers; I/O failures throw IoError.
void save_file(const SparseCoeffs& c, const std::filesystem::path& path);
SparseCoeffs load_file(const std::filesystem::path& path);

/// Formats a double with 17 significant digits ("%.17g").
std::string format_real(double v);

}  // namespace bicheb
