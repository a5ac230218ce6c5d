#pragma once

// JSON encodings of ambient norms, currents, simplicial complexes and chains.
//
//   ambient:  {"dim": N, "norm": {"tag": "l2" | "linf" | "l1"}}
//             {"dim": N, "norm": {"tag": "quad", "q": [[...], ...]}}
//             {"dim": N, "norm": {"tag": "prod", "parts": [ambient, ...]}}
//   current:  {"ambient": ..., "k": k, "cells": [{"vertices": [[...]], "multiplicity": m}]}
//   complex:  {"ambient": ..., "vertices": [[...]], "cells": [[[ids]...] per dimension]}
//   chain:    {"k": k, "coefficients": [...]}
//
// Readers validate and throw Error(Parse) on malformed input; the writers
// emit the canonical cell order, so equal currents serialize identically.

#include "gmt/current.hpp"
#include "gmt/flatnorm.hpp"
#include "gmt/onedim.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace gmt {

using Json = nlohmann::ordered_json;

Json to_json(const Vec& v);
Json to_json(const AmbientNorm& a);
Json to_json(const PolyhedralCurrent& t);
Json to_json(const SimplicialComplex& k);
Json to_json(const Chain& c);
/// Paths and loops as coordinate lists.
Json to_json(const Decomposition& d, const CurrentGraph& g);

Vec vec_from_json(const Json& j);
AmbientNorm ambient_from_json(const Json& j);
PolyhedralCurrent current_from_json(const Json& j);
SimplicialComplex complex_from_json(const Json& j);
Chain chain_from_json(const Json& j);

Json read_json(std::istream& in);
Json read_json_file(const std::string& path);
/// Two-space indentation and a trailing newline.
void write_json(std::ostream& out, const Json& j);
void write_json_file(const std::string& path, const Json& j);

}  // namespace gmt
