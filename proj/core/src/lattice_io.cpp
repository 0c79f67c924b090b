#include "k3lat/lattice_io.hpp"

#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace k3lat {

using detail::json;

IntegralLattice parse_lattice(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("lattice document: ") + e.what());
  }
  const json& g = detail::field(doc, "gram");
  if (!g.is_array()) throw std::invalid_argument("gram: expected an array");

  std::size_t n = 0;
  if (doc.contains("rank")) {
    const Integer r = detail::integer_from_json(doc.at("rank"), "rank");
    if (r < 0) throw std::invalid_argument("rank: negative");
    n = r.get_ui();
  } else if (!g.empty() && g.front().is_array()) {
    n = g.size();
  } else {
    throw std::invalid_argument("missing field 'rank'");
  }

  IntMatrix m(n, n);
  const bool nested = !g.empty() && g.front().is_array();
  if (nested) {
    m = detail::matrix_from_json(g, n, "gram");
    if (m.rows() != n) throw std::invalid_argument("gram: expected rank rows");
  } else {
    const IntVector flat = detail::vector_from_json(g, "gram");
    if (flat.size() != n * n) throw std::invalid_argument("gram: expected rank*rank entries");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = flat[i * n + j];
  }
  const std::string label = doc.contains("label") && doc.at("label").is_string()
                                ? doc.at("label").get<std::string>()
                                : std::string();
  return IntegralLattice(std::move(m), label);
}

IntegralLattice read_lattice_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_lattice(ss.str());
}

std::string lattice_to_json(const IntegralLattice& lattice, int indent) {
  json doc;
  doc["label"] = lattice.label();
  doc["rank"] = lattice.rank();
  doc["gram"] = detail::vector_to_json(lattice.gram().data());
  return doc.dump(indent);
}

}  // namespace k3lat
