#include "gmt/mesh_io.hpp"

#include "gmt/error.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace gmt {

namespace {

// Next non-empty line with comments stripped.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TriangleMesh read_off(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw Error(ErrorCode::Parse, "OFF: empty input");
  std::istringstream head(line);
  std::string magic;
  head >> magic;
  if (magic != "OFF") throw Error(ErrorCode::Parse, "OFF: missing header");
  long nv = -1, nf = -1, ne = 0;
  if (!(head >> nv)) {
    if (!next_line(in, line)) throw Error(ErrorCode::Parse, "OFF: missing counts");
    std::istringstream counts(line);
    counts >> nv >> nf >> ne;
  } else {
    head >> nf >> ne;
  }
  if (nv < 0 || nf < 0) throw Error(ErrorCode::Parse, "OFF: bad counts");
  TriangleMesh mesh;
  int dim = -1;
  for (long i = 0; i < nv; ++i) {
    if (!next_line(in, line)) throw Error(ErrorCode::Parse, "OFF: truncated vertex list");
    std::istringstream ls(line);
    std::vector<double> xs;
    double x;
    while (ls >> x) xs.push_back(x);
    if (!ls.eof() || xs.empty()) throw Error(ErrorCode::Parse, "OFF: bad vertex line");
    if (dim < 0) dim = static_cast<int>(xs.size());
    if (static_cast<int>(xs.size()) != dim) throw Error(ErrorCode::Parse, "OFF: inconsistent vertex dimension");
    mesh.vertices.push_back(Eigen::Map<Vec>(xs.data(), dim));
  }
  for (long i = 0; i < nf; ++i) {
    if (!next_line(in, line)) throw Error(ErrorCode::Parse, "OFF: truncated face list");
    std::istringstream ls(line);
    int count = 0;
    std::array<int, 3> t{};
    if (!(ls >> count) || count != 3) throw Error(ErrorCode::Parse, "OFF: only triangles are supported");
    for (int& v : t) {
      if (!(ls >> v) || v < 0 || v >= nv) throw Error(ErrorCode::Parse, "OFF: bad face index");
    }
    mesh.triangles.push_back(t);
  }
  return mesh;
}

TriangleMesh read_off_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return read_off(in);
}

void write_off(std::ostream& out, const TriangleMesh& mesh) {
  out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.triangles.size() << " 0\n";
  out << std::setprecision(17);
  for (const auto& v : mesh.vertices) {
    for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? " " : "") << v(i);
    out << '\n';
  }
  for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void write_off_file(const std::string& path, const TriangleMesh& mesh) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  write_off(out, mesh);
}

}  // namespace gmt
