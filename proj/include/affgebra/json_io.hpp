#pragma once

#include <json.hpp>

#include <string>

#include "affgebra/error.hpp"
#include "affgebra/field.hpp"
#include "affgebra/matrix.hpp"

namespace affgebra {

using Json = nlohmann::ordered_json;

template <ExactScalar S>
Json field_json(const Context<S>& ctx) {
  FieldDesc desc = describe<S>(ctx);
  Json out = Json::object();
  out["field"] = std::string(field_name(desc.tag));
  if (desc.tag == FieldTag::GF) out["p"] = desc.p;
  return out;
}

/// Reads {"field": ..., "p": ...} from any object carrying those keys.
inline FieldDesc field_desc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j["field"].is_string())
    fail(ErrorCode::ParseError, "missing \"field\"");
  FieldDesc desc{parse_field_tag(j["field"].get<std::string>()), 0};
  if (desc.tag == FieldTag::GF) {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) fail(ErrorCode::ParseError, "GF field needs \"p\"");
    desc.p = j["p"].get<std::uint64_t>();
  }
  return desc;
}

/// {"field": tag, "p": prime (GF only), "n": size, "entries": [[scalar strings]]}
template <ExactScalar S>
Json matrix_to_json(const Matrix<S>& m) {
  Json out = field_json<S>(m.context());
  out["n"] = m.size();
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  out["entries"] = std::move(rows);
  return out;
}

template <ExactScalar S>
Matrix<S> matrix_from_json(const Json& j, const Context<S>& ctx) {
  FieldDesc desc = field_desc_from_json(j);
  if (!(desc == describe<S>(ctx)))
    fail(ErrorCode::FieldMismatch, "matrix over " + desc.to_string() + ", expected " + describe<S>(ctx).to_string());
  if (!j.contains("n") || !j["n"].is_number_unsigned()) fail(ErrorCode::ParseError, "missing matrix size \"n\"");
  const auto n = j["n"].get<std::size_t>();
  if (n == 0) fail(ErrorCode::ParseError, "matrix size must be positive");
  const Json& rows = j.contains("entries") ? j["entries"] : Json();
  if (!rows.is_array() || rows.size() != n) fail(ErrorCode::ParseError, "\"entries\" must have n rows");
  Matrix<S> out(n, ctx);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) fail(ErrorCode::ParseError, "row " + std::to_string(r) + " must have n entries");
    for (std::size_t c = 0; c < n; ++c) {
      const Json& cell = rows[r][c];
      if (cell.is_string()) out(r, c) = parse_scalar<S>(cell.get<std::string>(), ctx);
      else if (cell.is_number_integer()) out(r, c) = S::from_int(cell.get<long>(), ctx);
      else fail(ErrorCode::ParseError, "scalar entries must be strings");
    }
  }
  return out;
}

}  // namespace affgebra
