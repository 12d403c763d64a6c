#include "diamondpaths/serialize.hpp"

namespace diamondpaths {

namespace {

const char* kind_name(PathKind k) {
  return k == PathKind::edge_disjoint ? "edge-disjoint" : "independent";
}

PathKind kind_from_name(const std::string& name) {
  if (name == "edge-disjoint") return PathKind::edge_disjoint;
  if (name == "independent") return PathKind::independent;
  throw parse_error("unknown path system kind \"" + name + "\"");
}

}  // namespace

nlohmann::json path_system_to_json(const PathSystem& ps) {
  nlohmann::json j;
  j["source"] = ps.source;
  j["sink"] = ps.sink;
  j["kind"] = kind_name(ps.kind);
  auto paths = nlohmann::json::array();
  for (const auto& p : ps.paths) paths.push_back(p.vertices);
  j["paths"] = std::move(paths);
  return j;
}

PathSystem path_system_from_json(const nlohmann::json& j) {
  try {
    PathSystem ps;
    ps.source = j.at("source").get<std::string>();
    ps.sink = j.at("sink").get<std::string>();
    ps.kind = kind_from_name(j.at("kind").get<std::string>());
    for (const auto& p : j.at("paths")) {
      ps.paths.push_back(Path{p.get<std::vector<VertexId>>()});
    }
    return ps;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid path system document: ") + e.what());
  }
}

nlohmann::json certificate_to_json(const UpperBoundCertificate& cert) {
  nlohmann::json j;
  j["bound"] = cert.bound;
  j["fallback"] = cert.fallback;
  if (cert.variant == CertVariant::vertex_cut) {
    j["variant"] = "vertex-cut";
    j["cut"] = cert.cut;
  } else {
    j["variant"] = "degree-bound";
    j["witness_vertex"] = cert.witness_vertex;
  }
  return j;
}

UpperBoundCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    UpperBoundCertificate cert;
    cert.bound = j.at("bound").get<int>();
    cert.fallback = j.value("fallback", false);
    std::string variant = j.at("variant").get<std::string>();
    if (variant == "vertex-cut") {
      cert.variant = CertVariant::vertex_cut;
      cert.cut = j.at("cut").get<std::vector<VertexId>>();
    } else if (variant == "degree-bound") {
      cert.variant = CertVariant::degree_bound;
      cert.witness_vertex = j.at("witness_vertex").get<std::string>();
    } else {
      throw parse_error("unknown certificate variant \"" + variant + "\"");
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid certificate document: ") + e.what());
  }
}

nlohmann::json witness_to_json(const IndependentWitness& w) {
  nlohmann::json j = path_system_to_json(w.system);
  j["u"] = w.u;
  j["v"] = w.v;
  return j;
}

IndependentWitness witness_from_json(const nlohmann::json& j) {
  try {
    IndependentWitness w;
    w.system = path_system_from_json(j);
    w.u = j.at("u").get<std::string>();
    w.v = j.at("v").get<std::string>();
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid witness document: ") + e.what());
  }
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string serialize_path_system(const PathSystem& ps) {
  return dump_json(path_system_to_json(ps));
}

PathSystem parse_path_system(const std::string& text) {
  try {
    return path_system_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid path system document: ") + e.what());
  }
}

std::string serialize_certificate(const UpperBoundCertificate& cert) {
  return dump_json(certificate_to_json(cert));
}

UpperBoundCertificate parse_certificate(const std::string& text) {
  try {
    return certificate_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid certificate document: ") + e.what());
  }
}

std::string serialize_witness(const IndependentWitness& w) {
  return dump_json(witness_to_json(w));
}

IndependentWitness parse_witness(const std::string& text) {
  try {
    return witness_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid witness document: ") + e.what());
  }
}

}  // namespace diamondpaths
