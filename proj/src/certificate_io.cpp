#include "wsbound/certificate_io.hpp"

namespace wsbound {

namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "wsbound-certificate/1";

json witness_to_json(const NegligibilityWitness& w) {
  json out;
  if (std::holds_alternative<NonNegligible>(w)) {
    out["kind"] = "non-negligible";
  } else if (std::holds_alternative<SpaceEquality>(w)) {
    out["kind"] = "space-equality";
  } else if (const auto* d = std::get_if<Decomposition>(&w)) {
    out["kind"] = "decomposition";
    out["lambda"] = d->lambda;
    out["mu"] = d->mu;
    out["monomial"] = d->monomial;
  } else if (const auto* h = std::get_if<HorizonRule>(&w)) {
    out["kind"] = "horizon-rule";
    out["threshold"] = h->threshold;
  }
  return out;
}

json edges_to_json(const std::vector<CertificateEdge>& edges) {
  json out = json::array();
  for (const auto& e : edges) {
    json ej;
    ej["direction"] = e.direction;
    ej["delta"] = e.delta;
    ej["witness"] = witness_to_json(e.witness);
    out.push_back(std::move(ej));
  }
  return out;
}

json common_to_json(const std::string& model_id, const std::string& hash,
                    const CurveModel& model, const std::vector<DivisorIndex>& path,
                    const std::vector<CertificateEdge>& edges, std::size_t final_direction,
                    Int horizon) {
  json doc;
  doc["format"] = kFormatTag;
  doc["model"]["id"] = model_id;
  doc["model"]["hash"] = hash;
  doc["model"]["document"] = json::parse(model_to_text(model));
  doc["path"] = path;
  doc["edges"] = edges_to_json(edges);
  doc["final_direction"] = final_direction;
  doc["horizon"] = horizon;
  return doc;
}

std::vector<DivisorIndex> path_from_json(const json& doc) {
  if (!doc.contains("path") || !doc.at("path").is_array()) {
    throw ParseError("certificate is missing the path");
  }
  std::vector<DivisorIndex> path;
  for (const auto& node : doc.at("path")) {
    path.push_back(node.get<DivisorIndex>());
  }
  return path;
}

void check_edges(const json& doc, const std::vector<CertificateEdge>& computed, Int weight,
                 const char* weight_key, Int recorded_weight) {
  const json& edges = doc.at("edges");
  if (!edges.is_array() || edges.size() != computed.size()) {
    throw CertificateMismatch("certificate lists " + std::to_string(edges.size()) +
                              " edges, path has " + std::to_string(computed.size()));
  }
  for (std::size_t k = 0; k < computed.size(); ++k) {
    if (!edges[k].contains("delta")) throw ParseError("certificate edge without delta");
    int recorded = edges[k].at("delta").get<int>();
    if (recorded != computed[k].delta) {
      throw CertificateMismatch("recomputed delta " + std::to_string(computed[k].delta) +
                                    " disagrees with recorded delta " + std::to_string(recorded) +
                                    " at edge " + std::to_string(k),
                                static_cast<int>(k));
    }
    if (edges[k].contains("direction") &&
        edges[k].at("direction").get<std::size_t>() != computed[k].direction) {
      throw CertificateMismatch("edge direction disagrees at edge " + std::to_string(k),
                                static_cast<int>(k));
    }
  }
  if (recorded_weight != weight) {
    throw CertificateMismatch(std::string(weight_key) + " " + std::to_string(recorded_weight) +
                              " disagrees with recomputed value " + std::to_string(weight));
  }
}

CurveModel model_from_certificate(const json& doc) {
  if (!doc.contains("model") || !doc.at("model").contains("document")) {
    throw ParseError("certificate is missing the embedded model document");
  }
  CurveModel model = parse_model(doc.at("model").at("document").dump());
  if (doc.at("model").contains("hash")) {
    std::string recorded = doc.at("model").at("hash").get<std::string>();
    if (recorded != model_hash(model)) {
      throw CertificateMismatch("embedded model does not match the recorded hash");
    }
  }
  return model;
}

}  // namespace

json certificate_to_json(const BoundCertificate& cert, const CurveModel& model) {
  json doc = common_to_json(cert.model_id, cert.model_hash, model, cert.path, cert.edges,
                            cert.final_direction, cert.horizon);
  doc["kind"] = "multipoint";
  doc["weight"] = cert.weight;
  doc["bound"] = cert.bound;
  return doc;
}

json certificate_to_json(const TBoundCertificate& cert, const CurveModel& model) {
  json doc = common_to_json(cert.model_id, cert.model_hash, model, cert.path, cert.edges,
                            cert.final_direction, cert.horizon);
  doc["kind"] = "tbound";
  doc["weight"] = cert.weight;
  doc["q_bound"] = cert.q_bound;
  doc["excluded_count"] = cert.excluded_count;
  doc["total_bound"] = cert.total_bound;
  doc["hypothesis_report"] = json::array();
  for (const auto& h : cert.hypothesis_report) {
    json hj;
    hj["place"] = h.place_name;
    hj["index"] = h.place;
    hj["up_to"] = h.up_to;
    hj["verified"] = h.verified;
    if (!h.note.empty()) hj["note"] = h.note;
    json realized = json::array();
    for (const auto& [lambda, monomial] : h.realized) {
      realized.push_back(json::array({lambda, monomial}));
    }
    hj["realized"] = std::move(realized);
    hj["missing"] = h.missing;
    doc["hypothesis_report"].push_back(std::move(hj));
  }
  return doc;
}

VerifySummary verify_certificate_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("certificate must be a JSON object");
  if (doc.contains("format") && doc.at("format").get<std::string>() != kFormatTag) {
    throw ParseError("unknown certificate format tag");
  }
  std::string kind = doc.contains("kind") ? doc.at("kind").get<std::string>() : "multipoint";
  CurveModel model = model_from_certificate(doc);
  std::vector<DivisorIndex> path = path_from_json(doc);

  VerifySummary summary;
  summary.kind = kind;
  if (kind == "multipoint") {
    BoundEngine engine(model);
    BoundCertificate computed = engine.evaluate_path(path);
    check_edges(doc, computed.edges, computed.weight, "weight",
                doc.contains("weight") ? doc.at("weight").get<Int>() : computed.weight);
    if (doc.contains("bound") && doc.at("bound").get<Int>() != computed.bound) {
      throw CertificateMismatch("recorded bound disagrees with recomputed bound " +
                                std::to_string(computed.bound));
    }
    if (doc.contains("final_direction") &&
        doc.at("final_direction").get<std::size_t>() != computed.final_direction) {
      throw CertificateMismatch("recorded final direction disagrees with the path");
    }
    summary.weight = computed.weight;
    summary.bound = computed.bound;
  } else if (kind == "tbound") {
    Int excluded = doc.contains("excluded_count") ? doc.at("excluded_count").get<Int>() : 0;
    TBoundEngine engine(model);
    TBoundCertificate computed = engine.evaluate_path(path, excluded);
    check_edges(doc, computed.edges, computed.q_bound, "q_bound",
                doc.contains("q_bound") ? doc.at("q_bound").get<Int>() : computed.q_bound);
    if (doc.contains("total_bound") && doc.at("total_bound").get<Int>() != computed.total_bound) {
      throw CertificateMismatch("recorded total bound disagrees with recomputed total " +
                                std::to_string(computed.total_bound));
    }
    summary.weight = computed.q_bound;
    summary.bound = computed.total_bound;
  } else {
    throw ParseError("unknown certificate kind '" + kind + "'");
  }
  return summary;
}

}  // namespace wsbound
