#ifndef BIER_JSON_IO_HPP
#define BIER_JSON_IO_HPP

#include <string>

#include "bier/bier.hpp"
#include "bier/complex.hpp"

namespace bier {

/// Parses the input schema {"m": <int>, "facets": [[<int>,...], ...]} with
/// 1-based vertices and m ≤ 32.  Throws std::invalid_argument with a field
/// diagnostic on schema violations (JSON syntax errors propagate from the
/// parser with position info).
Complex complex_from_json_text(const std::string& text);

/// Reads a file; if `path_or_inline` starts with '{' it is treated as inline
/// JSON instead.
Complex load_complex(const std::string& path_or_inline);

/// {"m": m, "faces": [...]} with faces in canonical order.
std::string complex_to_json(const Complex& K);

/// Adds {"base_m": m} alongside the face list; barred vertices appear as
/// m+i.
std::string bier_to_json(const BierComplex& B);

} // namespace bier

#endif
