#include "support.hpp"

#include "gmt/io.hpp"
#include "gmt/mesh_io.hpp"
#include "gmt/svg.hpp"

#include <sstream>

using namespace gmt;
using namespace gmt::test;

namespace {

Json parse(const std::string& text) {
  std::istringstream in(text);
  return read_json(in);
}

}  // namespace

TEST_CASE("currents round-trip through JSON bit for bit", "[io]") {
  Rng rng(110);
  for (int trial = 0; trial < 100; ++trial) {
    const PolyhedralCurrent t = random_planar_current(rng, uniform_int(rng, 1, 2));
    const Json j = to_json(t);
    const PolyhedralCurrent back = current_from_json(parse(j.dump()));
    CHECK(back.ambient() == t.ambient());
    CHECK((back - t).empty());
    CHECK(to_json(back).dump() == j.dump());
  }
}

TEST_CASE("ambient norms round-trip", "[io]") {
  Mat q(2, 2);
  q << 2, 0.5, 0.5, 1;
  const AmbientNorm prod = AmbientNorm::product({AmbientNorm::quadratic(q), AmbientNorm::sum_norm(1)});
  const AmbientNorm back = ambient_from_json(to_json(prod));
  CHECK(back == prod);
  CHECK(to_json(prod)["norm"]["tag"] == "prod");
}

TEST_CASE("complexes and chains round-trip", "[io]") {
  BuildOptions o;
  o.augment_box = true;
  const ComplexBuild b = build_complex({staircase(2), subdivided_diagonal(2)}, o);
  const SimplicialComplex k = complex_from_json(parse(to_json(b.complex).dump()));
  for (int d = 0; d <= 2; ++d) CHECK(k.cells(d) == b.complex.cells(d));
  const Chain c = chain_from_json(to_json(b.chains[0]));
  CHECK(c.k == 1);
  CHECK(c.coefficients == b.chains[0].coefficients);
}

TEST_CASE("malformed JSON is a parse error", "[io]") {
  const std::string ambient = R"("ambient": {"dim": 2, "norm": {"tag": "l2"}})";
  const std::vector<std::string> bad{
      "{",
      R"({"k": 1, "cells": []})",
      "{" + ambient + R"(, "k": 1, "cells": [{"vertices": [[0, 0]], "multiplicity": 1}]})",
      "{" + ambient + R"(, "k": 1, "cells": [{"vertices": [[0, 0], [1, 0, 0]], "multiplicity": 1}]})",
      "{" + ambient + R"(, "k": 1, "cells": [{"vertices": [[0, 0], [1, 0]], "multiplicity": 0.5}]})",
      "{" + ambient + R"(, "k": 3, "cells": []})",
      R"({"ambient": {"dim": 2, "norm": {"tag": "l7"}}, "k": 1, "cells": []})",
      R"({"ambient": {"dim": 2, "norm": {"tag": "quad", "q": [[1, 2], [2, 1]]}}, "k": 1, "cells": []})",
      "{" + ambient + R"(, "k": 1, "cells": [{"vertices": [[0, 0], [0, 0]], "multiplicity": 1}]})",
  };
  for (const auto& text : bad) {
    INFO(text);
    CHECK(code_of([&] { current_from_json(parse(text)); }) == ErrorCode::Parse);
  }
}

TEST_CASE("OFF round trip", "[io]") {
  TriangleMesh m;
  m.vertices = {pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0.5)};
  m.triangles = {{0, 1, 2}};
  std::stringstream s;
  write_off(s, m);
  const TriangleMesh back = read_off(s);
  CHECK(back.vertices.size() == 3);
  CHECK(back.triangles == m.triangles);
  CHECK(back.vertices[2] == m.vertices[2]);
}

TEST_CASE("OFF parse errors", "[io]") {
  const std::vector<std::string> bad{
      "",
      "PLY\n3 1 0\n",
      "OFF\n3 1 0\n0 0 0\n1 0 0\n",                           // truncated vertices
      "OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n",  // quad face
      "OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 7\n",           // index out of range
      "OFF\n3 1 0\n0 0 0\n1 x 0\n0 1 0\n3 0 1 2\n",           // bad number
  };
  for (const auto& text : bad) {
    INFO(text);
    std::istringstream in(text);
    CHECK(code_of([&] { read_off(in); }) == ErrorCode::Parse);
  }
  std::istringstream commented("# a comment\nOFF\n3 1 0\n# vertices\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
  CHECK(read_off(commented).triangles.size() == 1);
}

TEST_CASE("shipped data files load", "[io]") {
  const PolyhedralCurrent sq = current_from_json(read_json_file(std::string(GMT_DATA_DIR) + "/square_l2.json"));
  CHECK(mass(sq, JacobianKind::MassStar).total == Catch::Approx(1.0));
  const TriangleMesh m = read_off_file(std::string(GMT_DATA_DIR) + "/corpus/square-tent-0.2.off");
  CHECK(m.triangles.size() > 100);
  CHECK(code_of([] { read_json_file("/nonexistent/file.json"); }) == ErrorCode::Parse);
}

TEST_CASE("SVG output", "[io]") {
  const AmbientNorm e2 = AmbientNorm::euclidean(2);
  SvgFigure fig;
  fig.add_current(curve_current({pt(0, 0), pt(1, 0), pt(1, 1)}, true, e2), "black");
  std::ostringstream out;
  fig.write(out);
  const std::string svg = out.str();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  const AmbientNorm e3 = AmbientNorm::euclidean(3);
  CHECK(code_of([&] { fig.add_current(curve_current({pt(0, 0, 0), pt(1, 0, 0)}, false, e3), "red"); }) ==
        ErrorCode::DimensionMismatch);
}
