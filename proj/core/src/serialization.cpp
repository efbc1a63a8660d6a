#include "latreg/serialization.hpp"

#include <string>

namespace latreg {

namespace {

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw StructuralError("rational part must be an integer or a decimal string");
}

Json rational_to_json_pair(const Rational& q) {
  return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

const char* kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Zn: return "zn";
    case GroupKind::LexZ: return "lex";
    case GroupKind::PL: return "pl";
    case GroupKind::Product: return "product";
  }
  return "?";
}

std::vector<long long> int_vector_from_json(const Json& j, const char* field) {
  if (!j.is_array())
    throw StructuralError(std::string("field '") + field + "' must be an array of integers");
  std::vector<long long> v;
  v.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw StructuralError(std::string("field '") + field + "' must contain integers");
    v.push_back(x.get<long long>());
  }
  return v;
}

}  // namespace

Json to_json(const GroupElement& g) {
  Json j;
  j["kind"] = kind_name(g.kind());
  switch (g.kind()) {
    case GroupKind::Zn:
    case GroupKind::LexZ:
      j["v"] = g.coords();
      break;
    case GroupKind::PL: {
      Json bp = Json::array();
      for (const auto& p : g.pl_map().points()) {
        Json quad = Json::array();
        quad.push_back(integer_to_json(p.x.get_num()));
        quad.push_back(integer_to_json(p.x.get_den()));
        quad.push_back(integer_to_json(p.y.get_num()));
        quad.push_back(integer_to_json(p.y.get_den()));
        bp.push_back(std::move(quad));
      }
      j["bp"] = std::move(bp);
      break;
    }
    case GroupKind::Product: {
      Json parts = Json::array();
      for (const auto& p : g.parts()) parts.push_back(to_json(p));
      j["parts"] = std::move(parts);
      break;
    }
  }
  return j;
}

GroupElement group_element_from_json(const Json& j) {
  const std::string kind = j.value("kind", "");
  if (kind == "zn") return GroupElement::zn(int_vector_from_json(j.at("v"), "v"));
  if (kind == "lex") return GroupElement::lex(int_vector_from_json(j.at("v"), "v"));
  if (kind == "pl") {
    const Json& bp = j.at("bp");
    if (!bp.is_array()) throw StructuralError("field 'bp' must be an array");
    std::vector<PLPoint> pts;
    pts.reserve(bp.size());
    for (const auto& quad : bp) {
      if (!quad.is_array() || quad.size() != 4)
        throw StructuralError("field 'bp' entries must be [xn,xd,yn,yd]");
      Rational x(integer_from_json(quad[0]), integer_from_json(quad[1]));
      Rational y(integer_from_json(quad[2]), integer_from_json(quad[3]));
      x.canonicalize();
      y.canonicalize();
      pts.push_back({std::move(x), std::move(y)});
    }
    return GroupElement::pl(PLBijection::from_points(std::move(pts)));
  }
  if (kind == "product") {
    const Json& parts = j.at("parts");
    if (!parts.is_array()) throw StructuralError("field 'parts' must be an array");
    std::vector<GroupElement> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(group_element_from_json(p));
    return GroupElement::product(std::move(out));
  }
  throw StructuralError("field 'kind' must be one of zn/lex/pl/product");
}

Json to_json(const GroupSpec& spec) {
  Json j;
  j["kind"] = kind_name(spec.kind);
  switch (spec.kind) {
    case GroupKind::Zn: j["n"] = spec.size; break;
    case GroupKind::LexZ: j["k"] = spec.size; break;
    case GroupKind::PL: break;
    case GroupKind::Product: {
      Json comps = Json::array();
      for (const auto& c : spec.components) comps.push_back(to_json(c));
      j["components"] = std::move(comps);
      break;
    }
  }
  return j;
}

GroupSpec group_spec_from_json(const Json& j) {
  const std::string kind = j.value("kind", "");
  if (kind == "zn") {
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 1)
      throw StructuralError("group spec 'zn' requires a positive integer field 'n'");
    return GroupSpec::zn(j["n"].get<int>());
  }
  if (kind == "lex") {
    if (!j.contains("k") || !j["k"].is_number_integer() || j["k"].get<int>() < 1)
      throw StructuralError("group spec 'lex' requires a positive integer field 'k'");
    return GroupSpec::lex(j["k"].get<int>());
  }
  if (kind == "pl") return GroupSpec::pl();
  if (kind == "product") {
    if (!j.contains("components") || !j["components"].is_array() ||
        j["components"].empty())
      throw StructuralError("group spec 'product' requires a nonempty 'components' array");
    std::vector<GroupSpec> comps;
    for (const auto& c : j["components"]) comps.push_back(group_spec_from_json(c));
    return GroupSpec::product(std::move(comps));
  }
  throw StructuralError("group spec field 'kind' must be one of zn/lex/pl/product");
}

Json matrix_to_json(const CMat& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
  return out;
}

CMat matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(rows) * cols)
    throw StructuralError("matrix entries must be a row-major array of length rows*cols");
  CMat m(rows, cols);
  std::size_t idx = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c, ++idx) {
      const Json& e = j[idx];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw StructuralError("matrix entries must be [re,im] pairs");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  return m;
}

Json to_json(const Representation& rep) {
  Json j;
  j["n"] = rep.n;
  j["d"] = rep.d;
  Json gens = Json::array();
  for (const auto& g : rep.gens) gens.push_back(matrix_to_json(g));
  j["gens"] = std::move(gens);
  j["label"] = rep.label;
  return j;
}

Representation representation_from_json(const Json& j) {
  Representation rep;
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw StructuralError("representation requires integer field 'n'");
  if (!j.contains("d") || !j["d"].is_number_integer())
    throw StructuralError("representation requires integer field 'd'");
  rep.n = j["n"].get<int>();
  rep.d = j["d"].get<int>();
  if (!j.contains("gens") || !j["gens"].is_array() ||
      j["gens"].size() != static_cast<std::size_t>(rep.n))
    throw StructuralError("representation field 'gens' must list n matrices");
  for (const auto& g : j["gens"])
    rep.gens.push_back(matrix_from_json(g, rep.d, rep.d));
  rep.label = j.value("label", "");
  rep.validate();
  return rep;
}

Json to_json(const ConeTuple& t) {
  Json j = Json::array();
  for (const auto& p : t.elems) j.push_back(p.coords());
  return j;
}

ConeTuple cone_tuple_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw StructuralError("tuple must be a nonempty array of integer vectors");
  std::vector<std::vector<long long>> rows;
  rows.reserve(j.size());
  for (const auto& row : j) rows.push_back(int_vector_from_json(row, "tuple"));
  return ConeTuple::of(std::move(rows));
}

namespace {

const char* action_name(CertAction a) {
  switch (a) {
    case CertAction::BaseStarLeaf: return "base-star-leaf";
    case CertAction::Doubling: return "doubling";
    case CertAction::MeetDivide: return "meet-divide";
  }
  return "?";
}

const char* verdict_name(CertVerdict v) {
  switch (v) {
    case CertVerdict::Pass: return "pass";
    case CertVerdict::Fail: return "fail";
    case CertVerdict::Unverified: return "unverified";
  }
  return "?";
}

Json node_to_json(const CertNode& node) {
  Json j;
  j["tuple"] = to_json(node.tuple);
  j["action"] = action_name(node.action);
  if (node.g) j["g"] = node.g->coords();
  if (!node.subset.empty()) {
    Json members = Json::array();
    for (int i : node.subset) members.push_back(i + 1);  // 1-based, as printed
    j["J"] = std::move(members);
  }
  j["verdict"] = verdict_name(node.verdict);
  if (node.action == CertAction::BaseStarLeaf &&
      node.verdict != CertVerdict::Unverified)
    j["lambda_min"] = node.lambda_min;
  if (!node.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : node.children) kids.push_back(node_to_json(*c));
    j["children"] = std::move(kids);
  }
  return j;
}

}  // namespace

Json to_json(const Certificate& cert) {
  Json j;
  j["verdict"] = verdict_name(cert.verdict);
  j["root"] = cert.root ? node_to_json(*cert.root) : Json(nullptr);
  return j;
}

Json to_json(const WindowDilation& w) {
  Json j;
  j["tuple"] = to_json(w.tuple);
  j["ambient_dim"] = w.ambient_dim;
  Json blocks = Json::array();
  for (const auto& b : w.isometry_blocks) {
    Json entry;
    entry["rows"] = b.rows();
    entry["cols"] = b.cols();
    entry["data"] = matrix_to_json(b);
    blocks.push_back(std::move(entry));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

}  // namespace latreg
