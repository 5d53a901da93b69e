#include "io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "arrangeval/affine.hpp"

namespace arrangeval::io {

namespace {

Rational parse_number(const Json& j, const std::string& what) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(what + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw ParseError(what + ": expected a \"p/q\" string or an integer");
}

Integer parse_integer(const Json& j, const std::string& what) {
  const Rational q = parse_number(j, what);
  if (!is_integer(q)) throw ParseError(what + ": expected an integer");
  return q.get_num();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string decimal(const Rational& q) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", q.get_d());
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Arrangement parse_arrangement(const Json& j) {
  Arrangement a;
  const Json& type = field(j, "type");
  if (!type.is_string()) throw ParseError("\"type\" must be a string");
  const std::string t = type.get<std::string>();
  if (t == "toric") a.space = Space::Toric;
  else if (t == "affine") a.space = Space::Affine;
  else throw ParseError("\"type\" must be \"affine\" or \"toric\"");
  const Json& dim = field(j, "dim");
  if (!dim.is_number_unsigned()) throw ParseError("\"dim\" must be a nonnegative integer");
  a.n = dim.get<std::size_t>();
  const Json& hs = field(j, "hyperplanes");
  if (!hs.is_array()) throw ParseError("\"hyperplanes\" must be an array");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string tag = "hyperplane " + std::to_string(i);
    Hyperplane h;
    const Json& normal = field(hs[i], "normal");
    if (!normal.is_array()) throw ParseError(tag + ": \"normal\" must be an array");
    for (const auto& e : normal) h.normal.push_back(parse_integer(e, tag + " normal"));
    h.offset = parse_number(field(hs[i], "offset"), tag + " offset");
    a.hyperplanes.push_back(std::move(h));
  }
  return a;
}

std::vector<Vec> parse_points(const Json& j) {
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) throw ParseError("\"vertices\" must be an array");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_array()) throw ParseError("vertex " + std::to_string(i) + " must be an array");
    Vec v;
    for (const auto& e : vs[i]) v.push_back(parse_number(e, "vertex " + std::to_string(i)));
    out.push_back(std::move(v));
  }
  return out;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json to_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& z : v) {
    if (z.fits_slong_p()) out.push_back(z.get_si());
    else out.push_back(to_string(z));
  }
  return out;
}

Json to_json(const ValidationReport& r) {
  return Json{{"valid", r.valid}, {"violations", r.violations}};
}

Json to_json(const Arrangement& a) {
  Json hs = Json::array();
  for (const auto& h : a.hyperplanes) hs.push_back(Json{{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
  return Json{{"type", a.space == Space::Toric ? "toric" : "affine"}, {"dim", a.n}, {"hyperplanes", hs}};
}

Json report_header(const std::string& command, std::uint64_t seed, const ValidationReport& validation) {
  return Json{{"schema", kSchema}, {"command", command}, {"seed", seed}, {"validation", to_json(validation)}};
}

std::string csv_preamble(const std::string& command, std::uint64_t seed, const ValidationReport& validation) {
  std::string s = std::string("# schema=") + kSchema + " command=" + command + " seed=" + std::to_string(seed) +
                  " valid=" + (validation.valid ? "true" : "false") + "\n";
  for (const auto& v : validation.violations) s += "# violation: " + v + "\n";
  return s;
}

Json filtration_json(const ArrangementComplex& c, const FiltrationReport& r) {
  Json flats = Json::array();
  for (std::size_t f = 0; f < c.flats().size(); ++f) {
    flats.push_back(Json{{"id", c.flat(f).id}, {"codim", c.flat(f).codim}, {"cells", c.cells(f).size()}});
  }
  Json quotients = Json::array();
  for (std::size_t k = 0; k < r.quotients.size(); ++k) {
    Json labels = Json::array();
    for (const auto& f : c.layout(k).flags) labels.push_back(c.label(f));
    Json basis = Json::array();
    for (std::size_t i = 0; i < r.quotients[k].dim(); ++i) basis.push_back(to_json(r.quotients[k].basis_vector(i)));
    quotients.push_back(Json{{"k", k}, {"flags", labels}, {"basis", basis}});
  }
  return Json{{"flats", flats},     {"dim_v", r.dim_v},          {"dims", r.dims},
              {"dims_le", r.dims_le}, {"quotients", quotients}};
}

std::string filtration_csv(const ArrangementComplex& c, const FiltrationReport& r) {
  std::ostringstream os;
  os << "k,dim_v_k,dim_v_le_k,flags\n";
  for (std::size_t k = 0; k < r.dims.size(); ++k) {
    os << k << "," << r.dims[k] << "," << r.dims_le[k] << "," << c.layout(k).flags.size() << "\n";
  }
  return os.str();
}

std::string mode_name(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::Toric:
      return "toric";
    case VerifyMode::Pseudoaffine:
      return "pseudoaffine";
    case VerifyMode::AffineCompact:
      return "affine-compact";
  }
  return "";
}

Json verification_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& d : r.checks) {
    checks.push_back(Json{{"k", d.k},
                          {"description", d.name},
                          {"dim_flags", d.dim_flags},
                          {"rows", d.rows},
                          {"dim_solutions", d.dim_solutions},
                          {"dim_expected", d.dim_expected},
                          {"holds", d.holds}});
  }
  Json out{{"mode", mode_name(r.mode)}, {"dims", r.filtration.dims}, {"checks", checks}};
  out["bounded_dim"] = r.bounded_dim ? Json(*r.bounded_dim) : Json(nullptr);
  out["ok"] = r.ok();
  return out;
}

std::string verification_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "k,description,dim_flags,rows,dim_solutions,dim_expected,holds\n";
  for (const auto& d : r.checks) {
    os << d.k << "," << d.name << "," << d.dim_flags << "," << d.rows << "," << d.dim_solutions << ","
       << d.dim_expected << "," << (d.holds ? "true" : "false") << "\n";
  }
  return os.str();
}

std::vector<HadwigerRow> hadwiger_rows(const ArrangementComplex& c, const Polytope& p) {
  std::vector<HadwigerRow> rows;
  for (std::size_t k = 0; k <= c.n(); ++k) {
    const Vec geometric = hadwiger_vector(c, p, k);
    const Vec leray = hadwiger_vector_via_leray(c, p, k);
    const FlagLayout& layout = c.layout(k);
    for (std::size_t i = 0; i < layout.flags.size(); ++i) {
      if (!c.finite(layout.flags[i])) continue;
      rows.push_back({k, c.label(layout.flags[i]), geometric[i], leray[i]});
    }
  }
  return rows;
}

Json hadwiger_json(const std::vector<HadwigerRow>& rows) {
  Json values = Json::array();
  bool consistent = true;
  for (const auto& r : rows) {
    consistent = consistent && r.value == r.via_leray;
    values.push_back(Json{{"rank", r.rank}, {"flag", r.flag}, {"value", to_json(r.value)}, {"via_leray", to_json(r.via_leray)}});
  }
  return Json{{"values", values}, {"consistent", consistent}};
}

std::string hadwiger_csv(const std::vector<HadwigerRow>& rows) {
  std::ostringstream os;
  os << "rank,flag-id,orientation,value\n";
  for (const auto& r : rows) {
    os << r.rank << ",\"" << r.flag << "\",+1," << to_string(r.value) << "\n";
    os << r.rank << ",\"" << r.flag << "\",-1," << to_string(Rational(-r.value)) << "\n";
  }
  return os.str();
}

std::string decomposition_csv(const ArrangementComplex& c, const DecompositionTable& t) {
  std::ostringstream os;
  os << "rank,flag-id,orientation,coefficient\n";
  for (std::size_t k = 0; k < t.coefficients.size(); ++k) {
    const FlagLayout& layout = c.layout(k);
    for (std::size_t i = 0; i < layout.flags.size(); ++i) {
      const Rational& f = t.coefficients[k][i];
      os << k << ",\"" << c.label(layout.flags[i]) << "\",+1," << to_string(f) << "\n";
      os << k << ",\"" << c.label(layout.flags[i]) << "\",-1," << to_string(Rational(-f)) << "\n";
    }
  }
  return os.str();
}

Json verdict_json(const CongruenceVerdict& v) {
  Json out{{"congruent", v.congruent}};
  if (v.witness) {
    Json w{{"invariant", v.witness->invariant}};
    if (v.witness->direction) w["direction"] = to_json(*v.witness->direction);
    if (v.witness->point) w["point"] = to_json(*v.witness->point);
    w["left"] = to_json(v.witness->left);
    w["right"] = to_json(v.witness->right);
    out["witness"] = w;
  }
  return out;
}

Json invariant_table_json(const InvariantTable& t) {
  Json ups = Json::array();
  for (const auto& [d, v] : t.upsilon) ups.push_back(Json{{"direction", to_json(d)}, {"value", to_json(v)}});
  return Json{{"area", to_json(t.area)}, {"upsilon", ups}};
}

std::string glur_csv(const GlurResult& r) {
  std::ostringstream os;
  os << "polygon,invariant,direction,value\n";
  for (const auto* side : {&r.left, &r.right}) {
    const char* name = side == &r.left ? "p" : "q";
    os << name << ",area,," << to_string(side->area) << "\n";
    for (const auto& [d, v] : side->upsilon) {
      os << name << ",upsilon,\"" << to_string(d) << "\"," << to_string(v) << "\n";
    }
  }
  return os.str();
}

std::string zn_csv(const ZnResult& r) {
  std::ostringstream os;
  os << "cell,point,p,q\n";
  for (std::size_t i = 0; i < r.left.size(); ++i) {
    os << i << ",\"" << to_string(r.points[i]) << "\"," << to_string(r.left[i]) << "," << to_string(r.right[i]) << "\n";
  }
  return os.str();
}

namespace {

std::vector<Vec> counterclockwise(std::vector<Vec> pts) {
  const Vec center = vertex_average(pts);
  auto half = [&](const Vec& p) {
    const Rational dy = p[1] - center[1], dx = p[0] - center[0];
    return dy < 0 || (dy == 0 && dx < 0);
  };
  std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
    const bool ha = half(a), hb = half(b);
    if (ha != hb) return !ha;
    const Rational cr = (a[0] - center[0]) * (b[1] - center[1]) - (a[1] - center[1]) * (b[0] - center[0]);
    return cr > 0;
  });
  return pts;
}

// Segment of {a·x = level} inside the box [lo, hi]².
std::optional<std::pair<Vec, Vec>> clip_line(const IntVec& a, const Rational& level, const Vec& lo, const Vec& hi) {
  std::vector<Vec> pts;
  auto add_point = [&](Vec p) {
    if (p[0] < lo[0] || p[0] > hi[0] || p[1] < lo[1] || p[1] > hi[1]) return;
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  };
  const Rational a0(a[0]), a1(a[1]);
  for (const Rational& x : {lo[0], hi[0]}) {
    if (a1 != 0) add_point({x, (level - a0 * x) / a1});
  }
  for (const Rational& y : {lo[1], hi[1]}) {
    if (a0 != 0) add_point({(level - a1 * y) / a0, y});
  }
  if (pts.size() < 2) return std::nullopt;
  std::sort(pts.begin(), pts.end());
  return std::make_pair(pts.front(), pts.back());
}

}  // namespace

std::string render_svg(const ArrangementComplex& c, const std::string& comment) {
  if (c.n() != 2) throw std::invalid_argument("render: only 2-dimensional arrangements can be drawn");
  const bool toric = c.space() == Space::Toric;
  Vec lo{0, 0}, hi{1, 1};
  if (!toric) {
    lo = c.cells(0)[0].vertices[0];
    hi = lo;
    for (const auto& cell : c.cells(0)) {
      for (const auto& v : cell.vertices) {
        for (std::size_t i = 0; i < 2; ++i) {
          lo[i] = std::min(lo[i], v[i]);
          hi[i] = std::max(hi[i], v[i]);
        }
      }
    }
  }
  const Rational size = 400, margin = 20;
  const Rational scale = size / std::max(Rational(hi[0] - lo[0]), Rational(hi[1] - lo[1]));
  auto sx = [&](const Rational& x) { return decimal(margin + (x - lo[0]) * scale); };
  auto sy = [&](const Rational& y) { return decimal(margin + (hi[1] - y) * scale); };
  std::ostringstream os;
  const std::string w = decimal(size + 2 * margin), h = decimal(size + 2 * margin + 30);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << " " << h << "\">\n";
  os << "<!-- " << comment << " -->\n";
  os << "<defs><clipPath id=\"frame\"><rect x=\"" << sx(lo[0]) << "\" y=\"" << sy(hi[1]) << "\" width=\""
     << decimal((hi[0] - lo[0]) * scale) << "\" height=\"" << decimal((hi[1] - lo[1]) * scale)
     << "\"/></clipPath></defs>\n";
  os << "<g clip-path=\"url(#frame)\">\n";
  std::size_t bounded = 0;
  const auto& cells = c.cells(0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const bool b = toric || cells[i].bounded;
    bounded += cells[i].bounded ? 1 : 0;
    os << "<polygon fill=\"" << (b ? "#cfe3f5" : "#f2f2f2") << "\" stroke=\"none\" points=\"";
    const auto pts = counterclockwise(cells[i].vertices);
    for (std::size_t j = 0; j < pts.size(); ++j) os << (j ? " " : "") << sx(pts[j][0]) << "," << sy(pts[j][1]);
    os << "\"/>\n";
  }
  for (const auto& hp : c.arrangement().hyperplanes) {
    std::vector<Rational> levels;
    if (toric) {
      Rational mn = 0, mx = 0;
      for (const Rational& x : {lo[0], hi[0]}) {
        for (const Rational& y : {lo[1], hi[1]}) {
          const Rational v = Rational(hp.normal[0]) * x + Rational(hp.normal[1]) * y - hp.offset;
          mn = std::min(mn, v);
          mx = std::max(mx, v);
        }
      }
      for (Integer m = floor_of(mn); m <= floor_of(mx); ++m) levels.push_back(hp.offset + Rational(m));
    } else {
      levels.push_back(hp.offset);
    }
    for (const auto& level : levels) {
      const auto seg = clip_line(hp.normal, level, lo, hi);
      if (!seg) continue;
      os << "<line x1=\"" << sx(seg->first[0]) << "\" y1=\"" << sy(seg->first[1]) << "\" x2=\"" << sx(seg->second[0])
         << "\" y2=\"" << sy(seg->second[1]) << "\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
    }
  }
  os << "</g>\n";
  os << "<rect x=\"" << sx(lo[0]) << "\" y=\"" << sy(hi[1]) << "\" width=\"" << decimal((hi[0] - lo[0]) * scale)
     << "\" height=\"" << decimal((hi[1] - lo[1]) * scale) << "\" fill=\"none\" stroke=\"#555555\""
     << (toric ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Vec p = cells[i].point;
    if (toric) {
      for (auto& x : p) x = frac_of(x);
    }
    os << "<text x=\"" << sx(p[0]) << "\" y=\"" << sy(p[1])
       << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">c" << i << "</text>\n";
  }
  os << "<text x=\"" << decimal(margin) << "\" y=\"" << decimal(size + 2 * margin + 18)
     << "\" font-family=\"monospace\" font-size=\"13\">" << (toric ? "toric" : "affine") << ", "
     << c.arrangement().hyperplanes.size() << " hyperplanes, " << cells.size() << " regions";
  if (!toric) os << ", " << bounded << " bounded";
  os << "</text>\n</svg>\n";
  return os.str();
}

}  // namespace arrangeval::io
