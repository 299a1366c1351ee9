// SPDX-License-Identifier: Apache-2.0
#include "liepolar/matrix_io.hpp"

#include <cmath>

#include "json.hpp"

namespace liepolar {

namespace {

using Json = nlohmann::ordered_json;

double number_at(const Json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(where + ": expected a finite number");
  return d;
}

MatrixDocument::Kind parse_kind(const Json& doc) {
  const auto it = doc.find("kind");
  if (it == doc.end() || !it->is_string()) {
    throw ParseError("kind: expected one of lorentz|sl2c|pseudo");
  }
  const std::string kind = it->get<std::string>();
  if (kind == "lorentz") return MatrixDocument::Kind::Lorentz;
  if (kind == "sl2c") return MatrixDocument::Kind::Sl2c;
  if (kind == "pseudo") return MatrixDocument::Kind::Pseudo;
  throw ParseError("kind: expected one of lorentz|sl2c|pseudo, got \"" + kind + "\"");
}

}  // namespace

const char* kind_name(MatrixDocument::Kind kind) {
  switch (kind) {
    case MatrixDocument::Kind::Lorentz: return "lorentz";
    case MatrixDocument::Kind::Sl2c: return "sl2c";
    case MatrixDocument::Kind::Pseudo: return "pseudo";
  }
  return "?";
}

MatrixDocument lorentz_document(const MatR& m) {
  MatrixDocument doc;
  doc.kind = MatrixDocument::Kind::Lorentz;
  doc.dim = 4;
  doc.real = m;
  return doc;
}

MatrixDocument sl2c_document(const MatC2& m) {
  MatrixDocument doc;
  doc.kind = MatrixDocument::Kind::Sl2c;
  doc.dim = 2;
  doc.complex2 = m;
  return doc;
}

MatrixDocument pseudo_document(const MatR& m, std::vector<int> signs) {
  MatrixDocument doc;
  doc.kind = MatrixDocument::Kind::Pseudo;
  doc.dim = m.dim();
  doc.real = m;
  doc.signs = std::move(signs);
  return doc;
}

MatrixDocument parse_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");

  MatrixDocument out;
  out.kind = parse_kind(doc);

  const auto dim_it = doc.find("dim");
  if (dim_it == doc.end() || !dim_it->is_number_integer()) {
    throw ParseError("dim: expected an integer");
  }
  out.dim = dim_it->get<int>();
  if (out.kind == MatrixDocument::Kind::Lorentz && out.dim != 4) {
    throw ParseError("dim: expected 4 for kind lorentz");
  }
  if (out.kind == MatrixDocument::Kind::Sl2c && out.dim != 2) {
    throw ParseError("dim: expected 2 for kind sl2c");
  }
  if (out.kind == MatrixDocument::Kind::Pseudo && (out.dim < 2 || out.dim > MatR::kMaxDim)) {
    throw ParseError("dim: expected 2..16 for kind pseudo");
  }

  const auto signs_it = doc.find("signs");
  if (out.kind == MatrixDocument::Kind::Pseudo) {
    if (signs_it == doc.end() || !signs_it->is_array()) {
      throw ParseError("signs: required for kind pseudo");
    }
    if (static_cast<int>(signs_it->size()) != out.dim) {
      throw ParseError("signs: expected " + std::to_string(out.dim) + " entries");
    }
    for (const auto& v : *signs_it) {
      if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1)) {
        throw ParseError("signs: entries must be 1 or -1");
      }
      out.signs.push_back(v.get<int>());
    }
  } else if (signs_it != doc.end()) {
    throw ParseError("signs: only valid for kind pseudo");
  }

  const auto rows_it = doc.find("rows");
  if (rows_it == doc.end() || !rows_it->is_array()) throw ParseError("rows: expected an array");
  if (static_cast<int>(rows_it->size()) != out.dim) {
    throw ParseError("rows: expected " + std::to_string(out.dim) + " rows");
  }

  if (out.kind == MatrixDocument::Kind::Sl2c) {
    for (int i = 0; i < 2; ++i) {
      const Json& row = (*rows_it)[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != 2) {
        throw ParseError("rows[" + std::to_string(i) + "]: expected 2 entries");
      }
      for (int j = 0; j < 2; ++j) {
        const Json& entry = row[static_cast<std::size_t>(j)];
        const std::string where = "rows[" + std::to_string(i) + "][" + std::to_string(j) + "]";
        if (!entry.is_array() || entry.size() != 2) {
          throw ParseError(where + ": expected [re, im] pair");
        }
        out.complex2(i, j) = Complex(number_at(entry[0], where), number_at(entry[1], where));
      }
    }
    return out;
  }

  out.real = MatR(out.dim);
  for (int i = 0; i < out.dim; ++i) {
    const Json& row = (*rows_it)[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != out.dim) {
      throw ParseError("rows[" + std::to_string(i) + "]: expected " + std::to_string(out.dim) +
                       " entries");
    }
    for (int j = 0; j < out.dim; ++j) {
      out.real(i, j) = number_at(row[static_cast<std::size_t>(j)],
                                 "rows[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  return out;
}

std::string emit_document(const MatrixDocument& doc) {
  Json j;
  j["kind"] = kind_name(doc.kind);
  j["dim"] = doc.dim;
  if (doc.kind == MatrixDocument::Kind::Pseudo) j["signs"] = doc.signs;

  Json rows = Json::array();
  if (doc.kind == MatrixDocument::Kind::Sl2c) {
    for (int i = 0; i < 2; ++i) {
      Json row = Json::array();
      for (int j2 = 0; j2 < 2; ++j2) {
        const Complex c = doc.complex2(i, j2);
        row.push_back(Json::array({c.real(), c.imag()}));
      }
      rows.push_back(std::move(row));
    }
  } else {
    for (int i = 0; i < doc.dim; ++i) {
      Json row = Json::array();
      for (int j2 = 0; j2 < doc.dim; ++j2) row.push_back(doc.real(i, j2));
      rows.push_back(std::move(row));
    }
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace liepolar
