// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "liepolar/mat2c.hpp"
#include "liepolar/matrix.hpp"

namespace liepolar {

/// JSON matrix document exchanged by the CLI. Real entries are plain
/// numbers; sl2c entries are [re, im] pairs. signs is present iff
/// kind == Pseudo.
struct MatrixDocument {
  enum class Kind { Lorentz, Sl2c, Pseudo };

  Kind kind = Kind::Lorentz;
  int dim = 4;
  std::vector<int> signs;
  MatR real = MatR::identity(4);
  MatC2 complex2;
};

MatrixDocument lorentz_document(const MatR& m);
MatrixDocument sl2c_document(const MatC2& m);
MatrixDocument pseudo_document(const MatR& m, std::vector<int> signs);

/// Parse a document; messages name the offending field, e.g.
/// "rows[2]: expected 4 entries". Throws ParseError.
MatrixDocument parse_document(const std::string& text);

/// Serialize. Doubles are emitted in shortest round-trip form, so
/// parse(emit(doc)) reproduces every entry bit for bit and equal inputs
/// produce byte-identical output.
std::string emit_document(const MatrixDocument& doc);

const char* kind_name(MatrixDocument::Kind kind);

}  // namespace liepolar
