#include "k3lat/certificate_io.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#include "json_util.hpp"

namespace k3lat {

using detail::json;

namespace {

// Integers beyond 64 bits are wrapped so they stay distinct from string
// witnesses.
json witness_value_to_json(const WitnessValue& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return json(x);
        } else if constexpr (std::is_same_v<T, Integer>) {
          if (mpz_fits_slong_p(x.get_mpz_t())) return json(x.get_si());
          return json{{"integer", x.get_str()}};
        } else if constexpr (std::is_same_v<T, IntVector>) {
          return detail::vector_to_json(x);
        } else {
          return json(x);
        }
      },
      v);
}

WitnessValue witness_value_from_json(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) return detail::vector_from_json(j, "witness");
  if (j.is_object() && j.contains("integer") && j.size() == 1) {
    return detail::integer_from_json(j.at("integer"), "witness");
  }
  throw std::invalid_argument("witness: unsupported value");
}

json check_to_json(const Check& c) {
  json w = json::object();
  for (const auto& e : c.witness) w[e.key] = witness_value_to_json(e.value);
  return json{{"name", c.name}, {"passed", c.passed}, {"witness", w}};
}

Check check_from_json(const json& j) {
  Check c;
  const json& name = detail::field(j, "name");
  const json& passed = detail::field(j, "passed");
  const json& w = detail::field(j, "witness");
  if (!name.is_string() || !passed.is_boolean() || !w.is_object()) {
    throw std::invalid_argument("check: wrong field types");
  }
  c.name = name.get<std::string>();
  c.passed = passed.get<bool>();
  for (auto it = w.begin(); it != w.end(); ++it) {
    c.witness.push_back({it.key(), witness_value_from_json(it.value())});
  }
  return c;
}

std::vector<std::string> strings_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw std::invalid_argument(std::string(what) + ": expected strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

json certificate_json(const CaseCertificate& cert) {
  json doc;
  doc["sigma"] = cert.sigma;
  doc["d"] = detail::integer_to_json(cert.d);
  doc["ambient"] = {{"label", cert.ambient.label()},
                    {"rank", cert.ambient.rank()},
                    {"gram", detail::matrix_to_json(cert.ambient.gram())}};
  doc["embedding"] = {{"images", cert.images},
                      {"basis", detail::matrix_to_json(cert.embedding_basis)}};
  doc["complement"] = {{"rank", cert.complement_basis.rows()},
                       {"basis", detail::matrix_to_json(cert.complement_basis)},
                       {"gram", detail::matrix_to_json(cert.complement_gram)}};
  json checks = json::array();
  for (const auto& c : cert.checks) checks.push_back(check_to_json(c));
  doc["checks"] = checks;
  doc["cited"] = cert.cited;
  doc["notes"] = cert.notes;
  doc["passed"] = cert.passed();
  return doc;
}

}  // namespace

std::string certificate_to_json(const CaseCertificate& cert, int indent) {
  return certificate_json(cert).dump(indent);
}

CaseCertificate certificate_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("certificate: ") + e.what());
  }
  CaseCertificate cert;
  const json& sigma = detail::field(doc, "sigma");
  if (!sigma.is_number_integer()) throw std::invalid_argument("sigma: expected an integer");
  cert.sigma = sigma.get<int>();
  cert.d = detail::integer_from_json(detail::field(doc, "d"), "d");

  const json& amb = detail::field(doc, "ambient");
  const json& amb_gram = detail::field(amb, "gram");
  if (!amb_gram.is_array()) throw std::invalid_argument("ambient.gram: expected an array");
  const std::size_t n = amb_gram.size();
  std::string label;
  if (amb.contains("label") && amb.at("label").is_string()) label = amb.at("label").get<std::string>();
  cert.ambient = IntegralLattice(detail::matrix_from_json(amb_gram, n, "ambient.gram"), label);

  const json& emb = detail::field(doc, "embedding");
  cert.embedding_basis = detail::matrix_from_json(detail::field(emb, "basis"), n, "embedding.basis");
  if (emb.contains("images")) cert.images = strings_from_json(emb.at("images"), "embedding.images");

  const json& comp = detail::field(doc, "complement");
  cert.complement_basis =
      detail::matrix_from_json(detail::field(comp, "basis"), n, "complement.basis");
  const json& cg = detail::field(comp, "gram");
  if (!cg.is_array()) throw std::invalid_argument("complement.gram: expected an array");
  cert.complement_gram = detail::matrix_from_json(cg, cg.size(), "complement.gram");

  const json& checks = detail::field(doc, "checks");
  if (!checks.is_array()) throw std::invalid_argument("checks: expected an array");
  for (const auto& c : checks) cert.checks.push_back(check_from_json(c));
  if (doc.contains("cited")) cert.cited = strings_from_json(doc.at("cited"), "cited");
  if (doc.contains("notes")) cert.notes = strings_from_json(doc.at("notes"), "notes");
  return cert;
}

std::string verdict_to_json(const Verdict& v, int indent) {
  json doc;
  doc["p"] = v.p;
  doc["sigma"] = v.sigma;
  doc["answer"] = to_string(v.answer);
  doc["reason"] = to_string(v.reason);
  doc["d"] = v.d ? json(*v.d) : json(nullptr);
  if (v.arth_crosscheck) {
    const ArthCrosscheck& a = *v.arth_crosscheck;
    doc["arth_crosscheck"] = {{"d", a.d},
                              {"residue_rule", a.residue_rule},
                              {"ns_discriminant", detail::integer_to_json(a.ns_discriminant)},
                              {"arth_on_ns", a.arth_on_ns},
                              {"agree", a.agree()}};
  }
  if (v.sigma6_arth) doc["sigma6_arth"] = *v.sigma6_arth;
  doc["note"] = v.note;
  if (v.certificate) doc["certificate"] = certificate_json(*v.certificate);
  return doc.dump(indent);
}

std::string survey_to_csv(const SurveyReport& report) {
  std::ostringstream out;
  out << "p,sigma,answer,reason,d,residue_rule,arth_on_ns\n";
  for (const auto& v : report.rows) {
    out << v.p << ',' << v.sigma << ',' << to_string(v.answer) << ',' << to_string(v.reason) << ',';
    if (v.d) out << *v.d;
    out << ',';
    if (v.arth_crosscheck) {
      out << (v.arth_crosscheck->residue_rule ? "true" : "false") << ','
          << (v.arth_crosscheck->arth_on_ns ? "true" : "false");
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

std::string survey_summary(const SurveyReport& report) {
  std::map<std::int64_t, std::string> grid;
  for (const auto& v : report.rows) {
    const char c = v.answer == Answer::Yes ? 'Y' : v.answer == Answer::No ? 'N' : '?';
    grid[v.p] += c;
  }
  std::ostringstream out;
  out << "    p  sigma 1..10\n";
  for (const auto& [p, row] : grid) {
    out << std::setw(5) << p << "  ";
    for (char c : row) out << c << ' ';
    out << '\n';
  }
  out << "Y = Yes, N = No, ? = Unknown\n";
  if (report.pattern_holds()) {
    out << "pattern (Yes iff sigma <= 5) holds for p = 19 and 23 < p <= " << report.pmax << '\n';
  } else {
    out << "pattern violations:\n";
    for (const auto& s : report.pattern_violations) out << "  " << s << '\n';
  }
  return out.str();
}

}  // namespace k3lat
