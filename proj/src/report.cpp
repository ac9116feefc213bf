#include "tonnetz/report.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tonnetz {

namespace {

const std::array<const char*, 12> kNoteNames = {"C",  "C#", "D",  "D#", "E",  "F",
                                                "F#", "G",  "G#", "A",  "A#", "B"};

std::string count_word(int d) {
  static const std::array<const char*, 13> words = {"zero", "one", "two",   "three", "four",
                                                    "five", "six", "seven", "eight", "nine",
                                                    "ten",  "eleven", "twelve"};
  if (d >= 0 && d < static_cast<int>(words.size())) return words[d];
  return std::to_string(d);
}

std::string kind_name(const SpaceKind& kind, bool plural) {
  switch (kind.topology) {
    case Topology::TwoSimplex:
      return plural ? "2-simplices" : "2-simplex";
    case Topology::TetrahedronBoundary:
      return plural ? "tetrahedra boundaries" : "tetrahedron boundary";
    case Topology::Torus:
      return plural ? "tori" : "torus";
    case Topology::Cylinder:
      return plural ? "cylinders" : "cylinder";
    case Topology::MoebiusBand:
      return plural ? "Moebius bands" : "Moebius band";
    case Topology::CircleOfTetrahedra:
      return std::string(plural ? "circles" : "circle") + " of " +
             std::to_string(kind.circle_length) + " tetrahedra boundaries";
  }
  return "unknown";
}

nlohmann::json classification_json(const ClassificationRecord& r) {
  nlohmann::json j;
  j["components"] = r.num_components;
  j["kind"] = r.component_kind.token();
  if (r.component_kind.topology == Topology::CircleOfTetrahedra) {
    j["circle_length"] = r.component_kind.circle_length;
  }
  j["V"] = r.counts.num_vertices;
  j["E"] = r.counts.num_edges;
  j["F"] = r.counts.num_faces;
  j["chi"] = r.counts.euler;
  j["per_component_chi"] = r.per_component_euler;
  if (r.orientable) {
    j["orientable"] = *r.orientable;
  } else {
    j["orientable"] = nullptr;
  }
  if (r.boundary_circuits) {
    j["boundary_circuits_per_component"] = *r.boundary_circuits;
  } else {
    j["boundary_circuits_per_component"] = nullptr;
  }
  return j;
}

std::string pad(const std::string& text, std::size_t width) {
  std::string out = text;
  while (out.size() < width) out += ' ';
  return out;
}

std::string pad_left(const std::string& text, std::size_t width) {
  std::string out = text;
  while (out.size() < width) out.insert(out.begin(), ' ');
  return out;
}

}  // namespace

std::string shape_label(const TriadShape& shape) { return "C(" + shape.label() + ")"; }

std::string note_name(int pitch_class) {
  if (pitch_class < 0 || pitch_class >= 12) {
    throw std::invalid_argument("note_name: expected a residue mod 12");
  }
  return kNoteNames[pitch_class];
}

std::string trichord_label(const TriadShape& shape) {
  const int a = 0;
  const int b = shape.n1();
  const int c = shape.n1() + shape.n2();
  std::string out =
      "{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "}";
  if (shape.scale_size() == 12) {
    out += " = {" + note_name(a) + "," + note_name(b) + "," + note_name(c) + "}";
  }
  return out;
}

std::string kind_phrase(const SpaceKind& kind, int copies) {
  if (copies == 1) return kind_name(kind, false);
  return count_word(copies) + " disjoint " + kind_name(kind, true);
}

ReportRow build_report_row(const TriadShape& shape) {
  ReportRow row{shape, classify_closed_form(shape), shape_label(shape), "", ""};
  row.classification = kind_phrase(row.record.component_kind, row.record.num_components);
  row.trichord = trichord_label(shape);
  return row;
}

std::vector<ReportRow> enumerate_rows(int scale) {
  if (scale < 3) {
    throw std::invalid_argument("enumerate_rows: scale size must be at least 3");
  }
  std::vector<ReportRow> rows;
  for (const TriadShape& shape : all_shapes_with_scale(scale)) {
    rows.push_back(build_report_row(shape));
  }
  return rows;
}

std::string render_classify_line(const ClassificationRecord& r) {
  std::ostringstream out;
  out << shape_label(r.shape) << ": " << kind_phrase(r.component_kind, r.num_components) << "; V="
      << r.counts.num_vertices << " E=" << r.counts.num_edges << " F=" << r.counts.num_faces
      << " χ=" << r.counts.euler;
  if (r.orientable) {
    out << (*r.orientable ? "; orientable" : "; non-orientable");
  }
  if (r.boundary_circuits && *r.boundary_circuits > 0) {
    out << "; " << *r.boundary_circuits << " boundary circuit"
        << (*r.boundary_circuits == 1 ? "" : "s");
    if (r.num_components > 1) out << " per component";
  }
  return out.str();
}

std::string render_table(const std::vector<ReportRow>& rows) {
  const std::array<std::string, 7> header = {"shape", "classification", "trichord",
                                             "V",     "E",              "F",
                                             "chi"};
  std::array<std::size_t, 7> width;
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  std::vector<std::array<std::string, 7>> cells;
  for (const ReportRow& row : rows) {
    const CountSummary& c = row.record.counts;
    cells.push_back({row.label, row.classification, row.trichord,
                     std::to_string(c.num_vertices), std::to_string(c.num_edges),
                     std::to_string(c.num_faces), std::to_string(c.euler)});
    for (std::size_t i = 0; i < 7; ++i) width[i] = std::max(width[i], cells.back()[i].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::array<std::string, 7>& line) {
    out << pad(line[0], width[0]) << "  " << pad(line[1], width[1]) << "  "
        << pad(line[2], width[2]);
    for (std::size_t i = 3; i < 7; ++i) out << "  " << pad_left(line[i], width[i]);
    out << "\n";
  };
  emit(header);
  for (const auto& line : cells) emit(line);
  return out.str();
}

std::string render_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "n1,n2,n3,N,components,kind,V,E,F,chi,orientable,boundary_circuits\n";
  for (const ReportRow& row : rows) {
    const ClassificationRecord& r = row.record;
    out << row.shape.n1() << "," << row.shape.n2() << "," << row.shape.n3() << ","
        << row.shape.scale_size() << "," << r.num_components << "," << r.component_kind.token()
        << "," << r.counts.num_vertices << "," << r.counts.num_edges << "," << r.counts.num_faces
        << "," << r.counts.euler << ",";
    if (r.orientable) out << (*r.orientable ? "true" : "false");
    out << ",";
    if (r.boundary_circuits) out << *r.boundary_circuits;
    out << "\n";
  }
  return out.str();
}

std::string render_rows_json(const std::vector<ReportRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ReportRow& row : rows) {
    nlohmann::json j;
    j["shape"] = {{"n1", row.shape.n1()},
                  {"n2", row.shape.n2()},
                  {"n3", row.shape.n3()},
                  {"N", row.shape.scale_size()}};
    j["label"] = row.label;
    j["classification"] = classification_json(row.record);
    j["description"] = row.classification;
    j["trichord"] = row.trichord;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

std::string render_classification_json(const ClassificationRecord& record) {
  nlohmann::json j = classification_json(record);
  j["shape"] = {{"n1", record.shape.n1()},
                {"n2", record.shape.n2()},
                {"n3", record.shape.n3()},
                {"N", record.shape.scale_size()}};
  j["label"] = shape_label(record.shape);
  j["description"] = kind_phrase(record.component_kind, record.num_components);
  return j.dump(2) + "\n";
}

}  // namespace tonnetz
