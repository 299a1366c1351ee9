// SPDX-License-Identifier: Apache-2.0
#include <string>

#include "doctest.h"

#include "liepolar/lorentz.hpp"
#include "liepolar/matrix_io.hpp"
#include "liepolar/pseudo.hpp"
#include "liepolar/rng.hpp"
#include "liepolar/sl2c.hpp"

using namespace liepolar;

TEST_CASE("round trip is bit-faithful and byte-stable") {
  SplitMix64 rng(8);

  const MatrixDocument lor = lorentz_document(random_lorentz(rng).m);
  const std::string lor_text = emit_document(lor);
  const MatrixDocument lor_back = parse_document(lor_text);
  CHECK(max_abs_diff(lor.real, lor_back.real) == 0.0);
  CHECK(emit_document(lor_back) == lor_text);

  const MatrixDocument spin = sl2c_document(random_spinor(rng));
  const MatrixDocument spin_back = parse_document(emit_document(spin));
  CHECK(max_abs_diff(spin.complex2, spin_back.complex2) == 0.0);

  const Signature sig = signature_from_string("--+++");
  const MatrixDocument ps = pseudo_document(random_ge(sig, rng), sig.signs);
  const MatrixDocument ps_back = parse_document(emit_document(ps));
  CHECK(ps_back.signs == ps.signs);
  CHECK(max_abs_diff(ps.real, ps_back.real) == 0.0);
}

TEST_CASE("parse diagnostics name the offending field") {
  auto message_of = [](const std::string& text) {
    try {
      parse_document(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };

  CHECK(message_of("{") .find("invalid JSON") == 0);
  CHECK(message_of("{\"kind\":\"foo\",\"dim\":4,\"rows\":[]}") ==
        "kind: expected one of lorentz|sl2c|pseudo, got \"foo\"");
  CHECK(message_of("{\"kind\":\"lorentz\",\"dim\":3,\"rows\":[]}") ==
        "dim: expected 4 for kind lorentz");
  CHECK(message_of(
            "{\"kind\":\"lorentz\",\"dim\":4,\"rows\":[[1,0,0,0],[0,1,0,0],[0,0,1],[0,0,0,1]]}") ==
        "rows[2]: expected 4 entries");
  CHECK(message_of("{\"kind\":\"lorentz\",\"dim\":4,\"rows\":[[1,0,0,0],[0,1,0,0]]}") ==
        "rows: expected 4 rows");
  CHECK(message_of("{\"kind\":\"lorentz\",\"dim\":4,\"signs\":[1],\"rows\":[]}") ==
        "signs: only valid for kind pseudo");
  CHECK(message_of("{\"kind\":\"pseudo\",\"dim\":2,\"rows\":[[1,0],[0,1]]}") ==
        "signs: required for kind pseudo");
  CHECK(message_of("{\"kind\":\"pseudo\",\"dim\":2,\"signs\":[1,2],\"rows\":[[1,0],[0,1]]}") ==
        "signs: entries must be 1 or -1");
  CHECK(message_of("{\"kind\":\"sl2c\",\"dim\":2,\"rows\":[[[1,0],2],[[0,0],[1,0]]]}") ==
        "rows[0][1]: expected [re, im] pair");
  CHECK(message_of("{\"kind\":\"lorentz\",\"dim\":4,\"rows\":[[1,0,0,\"x\"],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}") ==
        "rows[0][3]: expected a number");
}

TEST_CASE("emitted spinor entries are [re, im] pairs") {
  const std::string text = emit_document(sl2c_document(exp_su2(1.0, kUnitY)));
  const MatrixDocument back = parse_document(text);
  CHECK(back.kind == MatrixDocument::Kind::Sl2c);
  CHECK(back.dim == 2);
  CHECK(text.find('[') != std::string::npos);
}
