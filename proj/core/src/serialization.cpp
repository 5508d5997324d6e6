#include "divaudit/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace divaudit {

using nlohmann::json;

json to_json(const Multinomial& p) {
  json arr = json::array();
  for (double w : p.weights()) arr.push_back(w);
  return arr;
}

Multinomial multinomial_from_json(const json& j) {
  if (!j.is_array()) {
    throw std::domain_error("expected a JSON array of weights");
  }
  return Multinomial::from_weights(j.get<std::vector<double>>());
}

json to_json(const CauchyParams& p) {
  return json{{"mu", p.mu}, {"sigma", p.sigma}};
}

CauchyParams cauchy_from_json(const json& j) {
  return make_cauchy(j.at("mu").get<double>(), j.at("sigma").get<double>());
}

json to_json(const TriangleCertificate& cert) {
  json points = json::array();
  if (cert.family == "multinomial") {
    for (const auto& p : cert.simplex_points) points.push_back(to_json(p));
  } else {
    for (const auto& p : cert.cauchy_points) points.push_back(to_json(p));
  }
  return json{{"schema", 1},
              {"family", cert.family},
              {"points", points},
              {"alpha", cert.alpha},
              {"d12", cert.d12},
              {"d23", cert.d23},
              {"d13", cert.d13},
              {"margin", cert.margin},
              {"generator", cert.generator},
              {"search_meta", json{{"witness_t", cert.witness_t}}}};
}

TriangleCertificate certificate_from_json(const json& j) {
  TriangleCertificate cert;
  cert.family = j.at("family").get<std::string>();
  if (cert.family != "multinomial" && cert.family != "cauchy") {
    throw std::domain_error("unknown certificate family: " + cert.family);
  }
  for (const auto& pj : j.at("points")) {
    if (cert.family == "multinomial") {
      cert.simplex_points.push_back(multinomial_from_json(pj));
    } else {
      cert.cauchy_points.push_back(cauchy_from_json(pj));
    }
  }
  cert.alpha = j.at("alpha").get<double>();
  cert.d12 = j.at("d12").get<double>();
  cert.d23 = j.at("d23").get<double>();
  cert.d13 = j.at("d13").get<double>();
  cert.margin = j.at("margin").get<double>();
  cert.generator = j.at("generator").get<std::string>();
  cert.witness_t = j.value("search_meta", json::object()).value("witness_t", 0.0);
  return cert;
}

json to_json(const LimitEstimate& est) {
  json samples = json::array();
  for (const auto& [t, r] : est.samples) samples.push_back(json{t, r});
  json j{{"schema", 1},
         {"target", est.target_name},
         {"samples", samples},
         {"estimate", est.estimate},
         {"error_bar", est.error_bar}};
  if (est.expected) {
    j["expected"] = *est.expected;
    j["pass"] = est.pass();
  }
  return j;
}

json to_json(const AuditReport& report) {
  return json{{"schema", 1},
              {"num_triples", report.num_triples},
              {"violations", report.violations},
              {"worst_margin", report.worst_margin},
              {"alpha", report.alpha},
              {"seed", report.seed}};
}

void write_file_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << text;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("rename failed: " + tmp + " -> " + path);
  }
}

}  // namespace divaudit
