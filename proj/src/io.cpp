#include "elastica/io.hpp"

#include <fstream>
#include <sstream>

#include "elastica/errors.hpp"

namespace elastica {

namespace {

json points_to_json(const std::vector<Vec2>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back({p.x, p.y});
    return arr;
}

std::vector<Vec2> points_from_json(const json& arr) {
    if (!arr.is_array()) throw ValidationError("expected an array of points");
    std::vector<Vec2> pts;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2)
            throw ValidationError("point must be a [x,y] pair");
        pts.push_back({e[0].get<double>(), e[1].get<double>()});
    }
    return pts;
}

}  // namespace

json curve_to_json(const Curve& c) {
    json j;
    j["format"] = 1;
    j["points"] = points_to_json(c.points());
    j["closed"] = true;
    if (c.is_resampled()) {
        j["uniform"] = true;
        j["length"] = c.total_length();
    }
    return j;
}

Curve curve_from_json(const json& j) {
    if (!j.contains("points")) throw ValidationError("curve JSON: missing \"points\"");
    if (j.contains("closed") && !j["closed"].get<bool>())
        throw ValidationError("curve JSON: open curves (\"closed\": false) are rejected");
    std::vector<Vec2> pts = points_from_json(j["points"]);
    if (j.value("uniform", false)) {
        if (j.contains("length"))
            return Curve::from_uniform_samples(std::move(pts), j["length"].get<double>());
        return Curve::from_uniform_samples(std::move(pts));
    }
    return Curve::from_points(std::move(pts));
}

json system_to_json(const CurveSystem& s) {
    json j;
    j["format"] = 1;
    j["curves"] = json::array();
    j["multiplicities"] = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        j["curves"].push_back(curve_to_json(s.curve(i)));
        j["multiplicities"].push_back(s.multiplicity(i));
    }
    return j;
}

CurveSystem system_from_json(const json& j) {
    if (!j.contains("curves")) throw ValidationError("system JSON: missing \"curves\"");
    std::vector<Curve> curves;
    for (const auto& cj : j["curves"]) curves.push_back(curve_from_json(cj));
    std::vector<int> mults;
    if (j.contains("multiplicities"))
        for (const auto& m : j["multiplicities"]) mults.push_back(m.get<int>());
    else
        mults.assign(curves.size(), 1);
    return CurveSystem::from_parts(std::move(curves), std::move(mults));
}

json family_to_json(const LevelFamily& f) {
    json j;
    j["format"] = 1;
    j["range"] = {f.range.first, f.range.second};
    j["slabs"] = json::array();
    for (std::size_t i = 0; i < f.thresholds.size(); ++i) {
        json slab;
        slab["t"] = f.thresholds[i];
        slab["system"] = system_to_json(f.systems[i]);
        j["slabs"].push_back(std::move(slab));
    }
    return j;
}

LevelFamily family_from_json(const json& j) {
    if (!j.contains("range") || !j.contains("slabs"))
        throw ValidationError("family JSON: missing \"range\" or \"slabs\"");
    LevelFamily f;
    f.range = {j["range"][0].get<double>(), j["range"][1].get<double>()};
    for (const auto& slab : j["slabs"]) {
        f.thresholds.push_back(slab["t"].get<double>());
        f.systems.push_back(system_from_json(slab["system"]));
    }
    f.validate();
    return f;
}

namespace {

json condition_to_json(const ConditionVerdict& c) {
    json j;
    j["pass"] = c.pass;
    j["witnesses"] = json::array();
    for (const auto& w : c.witnesses) {
        json wj;
        wj["point"] = {w.point.x, w.point.y};
        wj["t_lo"] = w.t_lo;
        wj["t_hi"] = w.t_hi;
        wj["note"] = w.note;
        j["witnesses"].push_back(std::move(wj));
    }
    return j;
}

}  // namespace

json verdict_to_json(const NestingVerdict& v) {
    json j;
    j["format"] = 1;
    j["is_member"] = v.is_member;
    j["condition_i"] = condition_to_json(v.condition_i);
    j["condition_ii"] = condition_to_json(v.condition_ii);
    j["condition_iii"] = condition_to_json(v.condition_iii);
    j["level_matches"] = json::array();
    for (const auto& m : v.level_matches) {
        json mj;
        mj["t"] = m.t;
        mj["area_pass"] = m.area_pass;
        mj["cover_pass"] = m.cover_pass;
        mj["sym_diff_area"] = m.sym_diff_area;
        mj["covered_fraction"] = m.covered_fraction;
        j["level_matches"].push_back(std::move(mj));
    }
    return j;
}

json cusped_to_json(const CuspedSet& s) {
    json j;
    j["format"] = 1;
    j["arcs"] = json::array();
    for (const auto& arc : s.boundary_arcs) j["arcs"].push_back(points_to_json(arc));
    j["cusp_pairs"] = json::array();
    for (const auto& pr : s.cusp_pairs)
        j["cusp_pairs"].push_back(
            {{pr.first.x, pr.first.y}, {pr.second.x, pr.second.y}});
    return j;
}

CuspedSet cusped_from_json(const json& j) {
    if (!j.contains("arcs")) throw ValidationError("cusped JSON: missing \"arcs\"");
    CuspedSet s;
    for (const auto& aj : j["arcs"]) s.boundary_arcs.push_back(points_from_json(aj));
    if (j.contains("cusp_pairs"))
        for (const auto& pj : j["cusp_pairs"]) {
            if (!pj.is_array() || pj.size() != 2)
                throw ValidationError("cusped JSON: cusp pair must hold two points");
            s.cusp_pairs.push_back({{pj[0][0].get<double>(), pj[0][1].get<double>()},
                                    {pj[1][0].get<double>(), pj[1][1].get<double>()}});
        }
    for (const auto& arc : s.boundary_arcs)
        for (const auto& p : arc) s.bbox.expand(p);
    return s;
}

json polygon_to_json(const std::vector<Vec2>& poly) {
    json j;
    j["format"] = 1;
    j["points"] = points_to_json(poly);
    return j;
}

std::vector<Vec2> polygon_from_json(const json& j) {
    if (!j.contains("points")) throw ValidationError("polygon JSON: missing \"points\"");
    return points_from_json(j["points"]);
}

json grid_to_json(const GridFunction& g) {
    json j;
    j["format"] = 1;
    j["spacing"] = g.spacing();
    j["origin"] = {g.origin().x, g.origin().y};
    json rows = json::array();
    for (int i = 0; i < g.rows(); ++i) {
        json row = json::array();
        for (int jj = 0; jj < g.cols(); ++jj) row.push_back(g.value(i, jj));
        rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    return j;
}

GridFunction grid_from_json(const json& j) {
    if (!j.contains("spacing") || !j.contains("values"))
        throw ValidationError("grid JSON: missing \"spacing\" or \"values\"");
    double h = j["spacing"].get<double>();
    Vec2 origin{0.0, 0.0};
    if (j.contains("origin"))
        origin = {j["origin"][0].get<double>(), j["origin"][1].get<double>()};
    const auto& rows = j["values"];
    int nr = static_cast<int>(rows.size());
    if (nr == 0) throw ValidationError("grid JSON: empty values");
    int nc = static_cast<int>(rows[0].size());
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(nr) * nc);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != nc)
            throw ValidationError("grid JSON: ragged rows");
        for (const auto& v : row) vals.push_back(v.get<double>());
    }
    return GridFunction::from_values(std::move(vals), nr, nc, h, origin);
}

namespace {

// Skips PGM whitespace and '#' comments.
int next_pgm_token(std::istream& in) {
    while (true) {
        int ch = in.peek();
        if (ch == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(ch)) {
            in.get();
        } else {
            break;
        }
    }
    int v;
    in >> v;
    if (!in) throw ValidationError("PGM: truncated header");
    return v;
}

}  // namespace

GridFunction read_pgm(const std::filesystem::path& path, double spacing, Vec2 origin) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path.string());
    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    bool binary;
    if (m0 == 'P' && m1 == '5')
        binary = true;
    else if (m0 == 'P' && m1 == '2')
        binary = false;
    else
        throw ValidationError("PGM: expected P2 or P5 magic");
    int cols = next_pgm_token(in);
    int rows = next_pgm_token(in);
    int maxval = next_pgm_token(in);
    if (maxval <= 0 || maxval > 65535)
        throw ValidationError("PGM: maxval must be in [1, 65535]");
    std::vector<double> vals(static_cast<std::size_t>(rows) * cols);
    if (binary) {
        in.get();  // single whitespace after maxval
        int bytes = maxval > 255 ? 2 : 1;
        std::vector<unsigned char> buf(static_cast<std::size_t>(rows) * cols * bytes);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        if (!in) throw ValidationError("PGM: truncated pixel data");
        for (std::size_t k = 0; k < static_cast<std::size_t>(rows) * cols; ++k) {
            int v = bytes == 2 ? (buf[2 * k] << 8) | buf[2 * k + 1] : buf[k];
            vals[k] = static_cast<double>(v) / maxval;
        }
    } else {
        for (auto& v : vals) {
            int x = next_pgm_token(in);
            v = static_cast<double>(x) / maxval;
        }
    }
    // PGM rows run top to bottom; grid rows run with increasing y.
    std::vector<double> flipped(vals.size());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            flipped[static_cast<std::size_t>(i) * cols + j] =
                vals[static_cast<std::size_t>(rows - 1 - i) * cols + j];
    // geometry sidecar: <name>.pgm.json with {"spacing":h, "origin":[x,y]}
    if (spacing <= 0.0) {
        std::filesystem::path meta = path;
        meta += ".json";
        if (std::filesystem::exists(meta)) {
            json m = load_json(meta);
            if (m.contains("spacing")) spacing = m["spacing"].get<double>();
            if (m.contains("origin"))
                origin = {m["origin"][0].get<double>(), m["origin"][1].get<double>()};
        }
    }
    if (spacing <= 0.0) spacing = 1.0 / (cols - 1);
    return GridFunction::from_values(std::move(flipped), rows, cols, spacing, origin);
}

void write_pgm(const GridFunction& g, const std::filesystem::path& path, int maxval,
               bool binary) {
    if (maxval <= 0 || maxval > 65535)
        throw ValidationError("PGM: maxval must be in [1, 65535]");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << (binary ? "P5" : "P2") << "\n"
        << g.cols() << " " << g.rows() << "\n"
        << maxval << "\n";
    auto quantize = [&](int i, int j) {
        double v = std::clamp(g.value(g.rows() - 1 - i, j), 0.0, 1.0);
        return static_cast<int>(std::lround(v * maxval));
    };
    if (binary) {
        int bytes = maxval > 255 ? 2 : 1;
        std::vector<unsigned char> buf;
        buf.reserve(static_cast<std::size_t>(g.rows()) * g.cols() * bytes);
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < g.cols(); ++j) {
                int v = quantize(i, j);
                if (bytes == 2) {
                    buf.push_back(static_cast<unsigned char>(v >> 8));
                    buf.push_back(static_cast<unsigned char>(v & 0xff));
                } else {
                    buf.push_back(static_cast<unsigned char>(v));
                }
            }
        out.write(reinterpret_cast<const char*>(buf.data()),
                  static_cast<std::streamsize>(buf.size()));
    } else {
        for (int i = 0; i < g.rows(); ++i) {
            for (int j = 0; j < g.cols(); ++j) out << quantize(i, j) << (j + 1 < g.cols() ? " " : "");
            out << "\n";
        }
    }
}

GridFunction read_grid_any(const std::filesystem::path& path, double spacing) {
    if (path.extension() == ".pgm") return read_pgm(path, spacing);
    return grid_from_json(load_json(path));
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("JSON parse error in " + path.string() + ": " + e.what());
    }
    return j;
}

void save_json(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

void save_text(const std::string& text, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << text;
}

}  // namespace elastica
