#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "evalcode/field.hpp"
#include "evalcode/point_set.hpp"

namespace evalcode {

// On-disk point set: {"field": {"type": "prime", "p": 101} | {"type": "rational"},
// "k": 3, "points": [[0, 0, 1], ...]}. Entries are integers or "a/b" strings.
struct PointSetFile {
  FieldSpec field = FieldSpec::rationals();
  std::size_t k = 0;
  std::vector<std::vector<std::string>> entries;  // decimal or fraction text per coordinate
};

// ParseError on malformed JSON or schema violations; InvalidField for a bad modulus.
PointSetFile parse_point_set_file(const std::string& text);
PointSetFile read_point_set_file(const std::string& path);

// Normalizes and validates (DuplicatePointError, ZeroVector, DimensionMismatch).
template <ExactField F>
PointSet<F> to_point_set(const PointSetFile& file, const F& field);

// Canonical text: sorted keys, one point per line, trailing newline. Writing a loaded
// canonical file reproduces it byte for byte.
template <ExactField F>
std::string canonical_json(const PointSet<F>& X);

template <ExactField F>
nlohmann::json point_set_json(const PointSet<F>& X);

nlohmann::json field_json(const FieldSpec& spec);

// An element as a JSON integer when integral and small, else as a "a/b" or decimal string.
template <ExactField F>
nlohmann::json scalar_json(const F& field, const typename F::value_type& v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace evalcode
