#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "elastica/family.hpp"
#include "elastica/grid.hpp"
#include "elastica/relaxed.hpp"
#include "elastica/system.hpp"

namespace elastica {

using json = nlohmann::json;

// Curve JSON: {"format":1, "points":[[x,y],...], "closed":true}. A curve
// written from a resampled state carries "uniform":true and is restored as
// such. Readers reject "closed": false.
json curve_to_json(const Curve& c);
Curve curve_from_json(const json& j);

// System JSON: {"curves":[CurveJSON,...], "multiplicities":[m1,...]}.
json system_to_json(const CurveSystem& s);
CurveSystem system_from_json(const json& j);

// LevelFamily JSON: {"range":[a,b], "slabs":[{"t":t_j,"system":SystemJSON},...]}.
json family_to_json(const LevelFamily& f);
LevelFamily family_from_json(const json& j);

// Verdict JSON with per-condition witnesses.
json verdict_to_json(const NestingVerdict& v);

// CuspedSet JSON: {"arcs":[[[x,y],...],...], "cusp_pairs":[[[x,y],[x,y]],...]}.
json cusped_to_json(const CuspedSet& s);
CuspedSet cusped_from_json(const json& j);

// Polygon JSON: {"points":[[x,y],...]} (closed implicitly).
json polygon_to_json(const std::vector<Vec2>& poly);
std::vector<Vec2> polygon_from_json(const json& j);

// Grid JSON: {"format":1, "spacing":h, "origin":[x,y], "values":[[...],...]}.
json grid_to_json(const GridFunction& g);
GridFunction grid_from_json(const json& j);

// PGM, P2 (ascii) and P5 (binary), maxval <= 65535; values map to [0,1].
// The writer clamps to [0,1]. Spacing and origin are not part of PGM; the
// reader applies the given spacing (default 1/(cols-1)) and origin (0,0).
GridFunction read_pgm(const std::filesystem::path& path, double spacing = 0.0,
                      Vec2 origin = {0.0, 0.0});
void write_pgm(const GridFunction& g, const std::filesystem::path& path,
               int maxval = 65535, bool binary = true);

// Grid or image file by extension: .pgm or .json.
GridFunction read_grid_any(const std::filesystem::path& path, double spacing = 0.0);

json load_json(const std::filesystem::path& path);
void save_json(const json& j, const std::filesystem::path& path);
void save_text(const std::string& text, const std::filesystem::path& path);

}  // namespace elastica
