#include "qhsp/json_io.hpp"

#include <fstream>

namespace qhsp {

Json quat_to_json(const Qd& q) { return Json::array({q.w, q.x, q.y, q.z}); }

Qd quat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw SchemaError("quaternion must be a 4-array");
  for (const auto& c : j)
    if (!c.is_number()) throw SchemaError("quaternion components must be numbers");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

Json qmat3_to_json(const QMat3& M) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(quat_to_json(M(i, j)));
    rows.push_back(row);
  }
  return rows;
}

QMat3 qmat3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw SchemaError("matrix must have 3 rows");
  QMat3 M;
  for (int r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3) throw SchemaError("matrix row must have 3 entries");
    for (int c = 0; c < 3; ++c) M(r, c) = quat_from_json(j[r][c]);
  }
  return M;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw SchemaError("bad exact rational: " + s);
    }
  }
  throw SchemaError("exact scalars must be integers or \"p/q\" strings");
}

Qr exact_quat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw SchemaError("quaternion must be a 4-array");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
          rational_from_json(j[3])};
}

QMat3r exact_qmat3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw SchemaError("matrix must have 3 rows");
  QMat3r M;
  for (int r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3) throw SchemaError("matrix row must have 3 entries");
    for (int c = 0; c < 3; ++c) M(r, c) = exact_quat_from_json(j[r][c]);
  }
  return M;
}

Json surface_rep_to_json(const SurfaceRep& rep) {
  Json images = Json::object();
  for (int g = 0; g < rep.pres.num_generators(); ++g)
    images[rep.pres.generator_name(g)] = qmat3_to_json(rep.images[g]);
  return Json{{"genus", rep.pres.genus},
              {"images", images},
              {"arith", "float"},
              {"tol", rep.tol}};
}

SurfaceRep surface_rep_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("genus") || !j.contains("images"))
    throw SchemaError("surface rep needs genus and images");
  int genus = j["genus"].get<int>();
  if (genus < 2) throw SchemaError("genus must be >= 2");
  if (j.value("arith", std::string("float")) != "float")
    throw SchemaError("surface representations use the float backend");

  SurfaceRep rep(genus);
  rep.tol = j.value("tol", 1e-9);
  for (int g = 0; g < rep.pres.num_generators(); ++g) {
    std::string name = rep.pres.generator_name(g);
    if (!j["images"].contains(name)) throw SchemaError("missing generator image " + name);
    rep.images.push_back(qmat3_from_json(j["images"][name]));
  }
  validate_surface_rep(rep);
  return rep;
}

Json qline_to_json(const QLine& line) {
  auto vec = [](const QVec3& v) {
    return Json::array({quat_to_json(v(0)), quat_to_json(v(1)), quat_to_json(v(2))});
  };
  return Json{{"span", Json::array({vec(line.u_plus), vec(line.u_minus)})}};
}

QLine qline_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("span") || !j["span"].is_array() || j["span"].size() != 2)
    throw SchemaError("line needs a span of two vectors");
  auto vec = [](const Json& a) {
    if (!a.is_array() || a.size() != 3) throw SchemaError("span vector must have 3 entries");
    QVec3 v;
    for (int i = 0; i < 3; ++i) v(i) = quat_from_json(a[i]);
    return v;
  };
  return make_qline(vec(j["span"][0]), vec(j["span"][1]));
}

Json lamination_to_json(const MeasuredLamination& lam, int genus) {
  Json curves = Json::array();
  for (const BendingCurve& c : lam.curves)
    curves.push_back(Json{{"axis_word", word_to_string(c.axis_word)},
                          {"q", quat_to_json(c.weight.q)},
                          {"d", quat_to_json(c.weight.d)}});
  Json crossings = Json::object();
  for (int g = 0; g < int(lam.crossings.size()); ++g) {
    if (lam.crossings[g].empty()) continue;
    Json list = Json::array();
    for (const Crossing& cr : lam.crossings[g])
      list.push_back(Json{{"conj", word_to_string(cr.conjugator)},
                          {"curve", cr.curve},
                          {"sign", cr.sign}});
    crossings[word_to_string(generator_word(g))] = list;
  }
  return Json{{"curves", curves}, {"crossings", crossings}, {"genus", genus}};
}

MeasuredLamination lamination_from_json(const Json& j, int genus) {
  if (!j.is_object() || !j.contains("curves") || !j["curves"].is_array())
    throw SchemaError("lamination needs a curves array");

  std::vector<BendingCurve> curves;
  for (const auto& c : j["curves"]) {
    BendingCurve bc;
    bc.axis_word = parse_word(c.at("axis_word").get<std::string>(), genus);
    bc.weight.q = quat_from_json(c.at("q"));
    bc.weight.d = quat_from_json(c.at("d"));
    curves.push_back(bc);
  }

  if (j.contains("crossings")) {
    MeasuredLamination lam;
    lam.curves = curves;
    lam.crossings.assign(2 * genus, {});
    for (const auto& [genname, list] : j["crossings"].items()) {
      Word gw = parse_word(genname, genus);
      if (gw.letters.size() != 1 || gw.letters[0] < 0)
        throw SchemaError("crossing key must be a single generator name");
      int g = gw.letters[0] - 1;
      for (const auto& cr : list) {
        Crossing x;
        x.conjugator = parse_word(cr.value("conj", std::string()), genus);
        x.curve = cr.at("curve").get<int>();
        x.sign = cr.at("sign").get<int>();
        if (x.sign != 1 && x.sign != -1) throw SchemaError("crossing sign must be +-1");
        lam.crossings[g].push_back(x);
      }
    }
    return lam;
  }

  // built-in genus-2 scenarios when no crossing data is supplied
  if (genus != 2)
    throw SchemaError("crossings required for genus != 2 laminations");
  std::string comm = "a1b1A1B1";
  if (curves.size() == 1 && word_to_string(curves[0].axis_word) == comm)
    return amalgam_lamination(curves[0].weight);
  if (curves.size() == 2 && word_to_string(curves[0].axis_word) == comm &&
      word_to_string(curves[1].axis_word) == "a2")
    return two_curve_lamination(curves[0].weight, curves[1].weight);
  throw SchemaError("no built-in crossing data for this curve system; supply crossings");
}

Json hull_report_to_json(const HullReport& report) {
  Json j{{"kind", to_string(report.kind)},
         {"closure_dim", report.closure_dim},
         {"commutant_dim", report.commutant_dim}};
  if (report.invariant_line)
    j["invariant_line"] = qline_to_json(*report.invariant_line);
  else
    j["invariant_line"] = nullptr;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("bad JSON in ") + path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << "\n";
}

} // namespace qhsp
