#include "gmt/io.hpp"

#include "gmt/error.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace gmt {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

double number(const Json& j) {
  if (!j.is_number()) fail("expected a number");
  return j.get<double>();
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("expected a nonempty matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) fail("matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Mat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Vec row = vec_from_json(j[static_cast<std::size_t>(r)]);
    if (row.size() != cols) fail("ragged matrix");
    m.row(r) = row.transpose();
  }
  return m;
}

}  // namespace

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json to_json(const AmbientNorm& a) {
  Json norm = {{"tag", a.tag()}};
  if (a.kind() == AmbientNorm::Kind::Quadratic) {
    Json q = Json::array();
    for (Eigen::Index r = 0; r < a.quadratic_form().rows(); ++r) q.push_back(to_json(Vec(a.quadratic_form().row(r).transpose())));
    norm["q"] = q;
  } else if (a.kind() == AmbientNorm::Kind::Product) {
    Json parts = Json::array();
    for (const auto& p : a.parts()) parts.push_back(to_json(p));
    norm["parts"] = parts;
  }
  return {{"dim", a.dim()}, {"norm", norm}};
}

Json to_json(const PolyhedralCurrent& t) {
  Json cells = Json::array();
  for (const auto& c : t.cells()) {
    Json verts = Json::array();
    for (const auto& v : c.simplex.vertices) verts.push_back(to_json(v));
    cells.push_back({{"vertices", verts}, {"multiplicity", c.multiplicity * c.simplex.orientation}});
  }
  return {{"ambient", to_json(t.ambient())}, {"k", t.dim()}, {"cells", cells}};
}

Json to_json(const SimplicialComplex& k) {
  Json verts = Json::array();
  for (const auto& v : k.vertices()) verts.push_back(to_json(v));
  Json cells = Json::array();
  for (int d = 0; d <= k.dim(); ++d) cells.push_back(k.cells(d));
  return {{"ambient", to_json(k.ambient())}, {"vertices", verts}, {"cells", cells}};
}

Json to_json(const Chain& c) { return {{"k", c.k}, {"coefficients", to_json(c.coefficients)}}; }

Json to_json(const Decomposition& d, const CurrentGraph& g) {
  auto coords = [&](const std::vector<int>& ids) {
    Json a = Json::array();
    for (int i : ids) a.push_back(to_json(g.vertices[static_cast<std::size_t>(i)]));
    return a;
  };
  Json paths = Json::array(), loops = Json::array();
  for (const auto& p : d.paths) paths.push_back({{"vertices", coords(p)}, {"length", path_length(g, p, false)}});
  for (const auto& l : d.loops) loops.push_back({{"vertices", coords(l)}, {"length", path_length(g, l, true)}});
  return {{"paths", paths}, {"loops", loops}, {"total_length", d.total_length(g)}, {"mass", g.mass()}};
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) fail("expected an array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i]);
  return v;
}

AmbientNorm ambient_from_json(const Json& j) {
  const int dim = int_field(j, "dim");
  if (dim < 1) fail("ambient dimension must be positive");
  const Json& norm = field(j, "norm");
  const Json& tag_j = field(norm, "tag");
  if (!tag_j.is_string()) fail("norm tag must be a string");
  const std::string tag = tag_j.get<std::string>();
  AmbientNorm a = AmbientNorm::euclidean(dim);
  try {
    if (tag == "l2") {
      a = AmbientNorm::euclidean(dim);
    } else if (tag == "linf") {
      a = AmbientNorm::max_norm(dim);
    } else if (tag == "l1") {
      a = AmbientNorm::sum_norm(dim);
    } else if (tag == "quad") {
      a = AmbientNorm::quadratic(mat_from_json(field(norm, "q")));
    } else if (tag == "prod") {
      const Json& parts = field(norm, "parts");
      if (!parts.is_array()) fail("'parts' must be an array");
      std::vector<AmbientNorm> ps;
      for (const auto& p : parts) ps.push_back(ambient_from_json(p));
      a = AmbientNorm::product(std::move(ps));
    } else {
      fail("unknown norm tag '" + tag + "'");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    fail(std::string("invalid norm: ") + e.what());
  }
  if (a.dim() != dim) fail("norm dimension does not match 'dim'");
  return a;
}

PolyhedralCurrent current_from_json(const Json& j) {
  const AmbientNorm a = ambient_from_json(field(j, "ambient"));
  const int k = int_field(j, "k");
  if (k < 0 || k > a.dim()) fail("current dimension out of range");
  const Json& cells = field(j, "cells");
  if (!cells.is_array()) fail("'cells' must be an array");
  std::vector<Cell> out;
  for (const auto& c : cells) {
    const Json& verts = field(c, "vertices");
    if (!verts.is_array() || static_cast<int>(verts.size()) != k + 1) fail("a cell needs k + 1 vertices");
    std::vector<Point> pts;
    for (const auto& v : verts) {
      Vec p = vec_from_json(v);
      if (p.size() != a.dim()) fail("vertex dimension does not match the ambient");
      if (!all_finite(p)) fail("non-finite coordinate");
      pts.push_back(std::move(p));
    }
    const Json& m = field(c, "multiplicity");
    if (!m.is_number_integer()) fail("multiplicity must be an integer");
    out.push_back({Simplex(std::move(pts)), m.get<long long>()});
  }
  try {
    return PolyhedralCurrent(a, k, std::move(out));
  } catch (const Error& e) {
    fail(std::string("invalid current: ") + e.what());
  }
}

SimplicialComplex complex_from_json(const Json& j) {
  const AmbientNorm a = ambient_from_json(field(j, "ambient"));
  const Json& verts = field(j, "vertices");
  if (!verts.is_array()) fail("'vertices' must be an array");
  std::vector<Point> pts;
  for (const auto& v : verts) {
    Vec p = vec_from_json(v);
    if (p.size() != a.dim()) fail("vertex dimension does not match the ambient");
    pts.push_back(std::move(p));
  }
  const Json& cells = field(j, "cells");
  if (!cells.is_array() || cells.empty()) fail("'cells' must be a nonempty array");
  std::vector<std::vector<std::vector<int>>> cs;
  for (const auto& level : cells) {
    if (!level.is_array()) fail("each dimension of 'cells' must be an array");
    std::vector<std::vector<int>> lv;
    for (const auto& c : level) {
      if (!c.is_array()) fail("a cell must be an array of vertex ids");
      std::vector<int> ids;
      for (const auto& id : c) {
        if (!id.is_number_integer()) fail("vertex ids must be integers");
        ids.push_back(id.get<int>());
      }
      lv.push_back(std::move(ids));
    }
    cs.push_back(std::move(lv));
  }
  try {
    return SimplicialComplex(a, std::move(pts), std::move(cs));
  } catch (const Error& e) {
    fail(std::string("invalid complex: ") + e.what());
  }
}

Chain chain_from_json(const Json& j) {
  Chain c;
  c.k = int_field(j, "k");
  if (c.k < 0) fail("chain dimension must be nonnegative");
  c.coefficients = vec_from_json(field(j, "coefficients"));
  return c;
}

Json read_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  return read_json(in);
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  write_json(out, j);
}

}  // namespace gmt
