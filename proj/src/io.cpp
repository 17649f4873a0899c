#include "evalcode/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <type_traits>

#include "evalcode/error.hpp"

namespace evalcode {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::parse_error, what);
}

std::string entry_text(const nlohmann::json& v, std::size_t i, std::size_t j) {
  const std::string where = "points[" + std::to_string(i) + "][" + std::to_string(j) + "]";
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? std::to_string(v.get<std::uint64_t>())
                                  : std::to_string(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s.empty()) parse_fail(where + " is an empty string");
    return s;
  }
  parse_fail(where + " must be an integer or an \"a/b\" string");
}

}  // namespace

PointSetFile parse_point_set_file(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "field" && key != "k" && key != "points") parse_fail("unexpected key '" + key + "'");
  }
  PointSetFile out;

  if (!doc.contains("field") || !doc["field"].is_object()) parse_fail("missing object 'field'");
  const auto& f = doc["field"];
  if (!f.contains("type") || !f["type"].is_string()) parse_fail("field.type must be a string");
  const auto type = f["type"].get<std::string>();
  if (type == "prime") {
    if (!f.contains("p") || !f["p"].is_number_integer()) parse_fail("field.p must be an integer");
    const auto p = f["p"].get<std::int64_t>();
    if (p < 2) throw Error(ErrorCode::invalid_field, "p must be a prime, got " + std::to_string(p));
    out.field = FieldSpec::prime(static_cast<std::uint64_t>(p));
  } else if (type == "rational") {
    out.field = FieldSpec::rationals();
  } else {
    parse_fail("field.type must be \"prime\" or \"rational\"");
  }

  if (!doc.contains("k") || !doc["k"].is_number_integer()) parse_fail("'k' must be an integer");
  const auto k = doc["k"].get<std::int64_t>();
  if (k < 2 || k > static_cast<std::int64_t>(max_variables)) {
    parse_fail("'k' must be in [2, " + std::to_string(max_variables) + "]");
  }
  out.k = static_cast<std::size_t>(k);

  if (!doc.contains("points") || !doc["points"].is_array()) parse_fail("'points' must be an array");
  const auto& pts = doc["points"];
  if (pts.empty()) parse_fail("'points' is empty");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].is_array()) parse_fail("points[" + std::to_string(i) + "] must be an array");
    if (pts[i].size() != out.k) {
      throw Error(ErrorCode::dimension_mismatch,
                  "points[" + std::to_string(i) + "] has " + std::to_string(pts[i].size()) +
                      " entries, expected k = " + std::to_string(out.k));
    }
    std::vector<std::string> row;
    for (std::size_t j = 0; j < pts[i].size(); ++j) row.push_back(entry_text(pts[i][j], i, j));
    out.entries.push_back(std::move(row));
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::parse_error, "cannot write '" + path + "'");
  out << text;
}

PointSetFile read_point_set_file(const std::string& path) {
  return parse_point_set_file(read_text_file(path));
}

template <ExactField F>
PointSet<F> to_point_set(const PointSetFile& file, const F& field) {
  std::vector<std::vector<typename F::value_type>> rows;
  for (std::size_t i = 0; i < file.entries.size(); ++i) {
    std::vector<typename F::value_type> row;
    for (const auto& text : file.entries[i]) {
      try {
        row.push_back(parse_scalar(field, text));
      } catch (const Error& e) {
        throw Error(e.code() == ErrorCode::division_by_zero ? ErrorCode::parse_error : e.code(),
                    "points[" + std::to_string(i) + "]: " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return point_set(field, file.k, rows);
}

nlohmann::json field_json(const FieldSpec& spec) {
  if (spec.is_prime()) return {{"type", "prime"}, {"p", spec.p}};
  return {{"type", "rational"}};
}

template <ExactField F>
nlohmann::json scalar_json(const F& field, const typename F::value_type& v) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    (void)field;
    return v;
  } else {
    if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
    return field.to_string(v);
  }
}

template <ExactField F>
nlohmann::json point_set_json(const PointSet<F>& X) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : X.points()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : p.coords()) row.push_back(scalar_json(X.field(), c));
    pts.push_back(std::move(row));
  }
  return {{"field", field_json(X.field().spec())}, {"k", X.k()}, {"points", std::move(pts)}};
}

template <ExactField F>
std::string canonical_json(const PointSet<F>& X) {
  const auto doc = point_set_json(X);
  std::string out = "{\n  \"field\": ";
  if (X.field().spec().is_prime()) {
    out += "{\"p\": " + std::to_string(X.field().spec().p) + ", \"type\": \"prime\"}";
  } else {
    out += "{\"type\": \"rational\"}";
  }
  out += ",\n  \"k\": " + std::to_string(X.k()) + ",\n  \"points\": [\n";
  const auto& pts = doc["points"];
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out += "    [";
    for (std::size_t j = 0; j < pts[i].size(); ++j) {
      if (j) out += ", ";
      out += pts[i][j].dump();
    }
    out += i + 1 < pts.size() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

#define EVALCODE_INSTANTIATE(F)                                                          \
  template PointSet<F> to_point_set(const PointSetFile&, const F&);                      \
  template std::string canonical_json(const PointSet<F>&);                               \
  template nlohmann::json point_set_json(const PointSet<F>&);                            \
  template nlohmann::json scalar_json(const F&, const typename F::value_type&);

EVALCODE_INSTANTIATE(PrimeField)
EVALCODE_INSTANTIATE(RationalField)

}  // namespace evalcode
