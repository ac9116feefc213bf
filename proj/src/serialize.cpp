#include "tonnetz/serialize.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "tonnetz/classifier.hpp"
#include "tonnetz/report.hpp"

namespace tonnetz {

std::string complex_to_json(const TonnetzComplex& complex) {
  nlohmann::json j;
  j["shape"] = {{"n1", complex.shape.n1()},
                {"n2", complex.shape.n2()},
                {"n3", complex.shape.n3()},
                {"N", complex.shape.scale_size()}};
  nlohmann::json vertices = nlohmann::json::array();
  for (const PitchClass& v : complex.vertices) vertices.push_back(v.value());
  j["vertices"] = vertices;
  nlohmann::json edges = nlohmann::json::array();
  for (const Simplex& e : complex.edges) {
    edges.push_back({e.vertices()[0].value(), e.vertices()[1].value()});
  }
  j["edges"] = edges;
  nlohmann::json faces = nlohmann::json::array();
  for (const Simplex& f : complex.faces) {
    faces.push_back({f.vertices()[0].value(), f.vertices()[1].value(), f.vertices()[2].value()});
  }
  j["faces"] = faces;
  j["classification"] = nlohmann::json::parse(render_classification_json(
      classify_closed_form(complex.shape)));
  return j.dump(2) + "\n";
}

TonnetzComplex complex_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("complex_from_json: ") + e.what());
  }
  if (!j.contains("shape") || !j.contains("faces")) {
    throw std::invalid_argument("complex_from_json: missing shape or faces");
  }
  std::array<int, 3> intervals{};
  int declared_n = 0;
  std::vector<std::array<int, 3>> face_entries;
  try {
    const auto& s = j["shape"];
    intervals = {s.at("n1").get<int>(), s.at("n2").get<int>(), s.at("n3").get<int>()};
    declared_n = s.contains("N") ? s["N"].get<int>() : 0;
    for (const auto& f : j["faces"]) {
      if (!f.is_array() || f.size() != 3) {
        throw std::invalid_argument("complex_from_json: face entries must be triples");
      }
      face_entries.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("complex_from_json: ") + e.what());
  }
  const TriadShape shape(intervals[0], intervals[1], intervals[2]);
  if (declared_n != 0 && declared_n != shape.scale_size()) {
    throw std::invalid_argument("complex_from_json: declared N differs from interval sum");
  }
  const int n = shape.scale_size();

  std::set<Simplex> faces;
  for (const auto& f : face_entries) {
    faces.insert(Simplex::of({f[0], f[1], f[2]}, n));
  }
  TonnetzComplex complex = complex_from_faces(shape, faces);

  // The document must describe the declared shape's complex exactly.
  const TonnetzComplex rebuilt = build_complex(shape);
  if (complex.faces != rebuilt.faces) {
    throw std::invalid_argument("complex_from_json: face list does not match C(" +
                                shape.label() + ")");
  }
  if (j.contains("edges")) {
    std::set<Simplex> listed;
    try {
      for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) {
          throw std::invalid_argument("complex_from_json: edge entries must be pairs");
        }
        listed.insert(Simplex::of({e[0].get<int>(), e[1].get<int>()}, n));
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("complex_from_json: ") + e.what());
    }
    if (listed != rebuilt.edges) {
      throw std::invalid_argument("complex_from_json: edge list does not match C(" +
                                  shape.label() + ")");
    }
  }
  if (j.contains("vertices") && j["vertices"].size() != rebuilt.vertices.size()) {
    throw std::invalid_argument("complex_from_json: vertex count does not match");
  }
  return complex;
}

std::string face_graph_dot(const TonnetzComplex& complex) {
  std::ostringstream out;
  out << "graph face_adjacency {\n";
  out << "  node [shape=box];\n";
  for (const Simplex& face : complex.faces) {
    out << "  \"" << face.label() << "\";\n";
  }
  const int n = complex.scale_size();
  for (const auto& [edge, faces] : complex.edge_to_faces) {
    if (faces.size() < 2) continue;
    const bool tritone = 2 * edge_length(complex.shape, edge) == n;
    std::vector<const Simplex*> around;
    for (const Simplex& f : faces) around.push_back(&f);
    for (std::size_t i = 0; i < around.size(); ++i) {
      for (std::size_t k = i + 1; k < around.size(); ++k) {
        out << "  \"" << around[i]->label() << "\" -- \"" << around[k]->label() << "\""
            << " [label=\"" << edge.label() << "\"" << (tritone ? ", style=dashed" : "")
            << "];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace tonnetz
