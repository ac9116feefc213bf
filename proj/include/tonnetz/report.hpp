#ifndef TONNETZ_REPORT_HPP
#define TONNETZ_REPORT_HPP

#include <string>
#include <vector>

#include "tonnetz/classifier.hpp"
#include "tonnetz/shape.hpp"

namespace tonnetz {

/// One line of the per-scale survey: shape, classification phrase, the
/// representative type-I trichord rooted at 0, and the counts.
struct ReportRow {
  TriadShape shape;
  ClassificationRecord record;
  std::string label;           // "C(1,1,10)"
  std::string classification;  // "cylinder", "two disjoint cylinders", ...
  std::string trichord;        // "{0,1,2} = {C,C#,D}" (note names only for N=12)
};

std::string shape_label(const TriadShape& shape);

/// "C", "C#", ..., "B" for the twelve-tone scale.
std::string note_name(int pitch_class);

std::string trichord_label(const TriadShape& shape);

/// English phrase for d components of a kind, pluralized the way the survey
/// table words it: "torus", "two disjoint cylinders", "circle of 6
/// tetrahedra boundaries", ...
std::string kind_phrase(const SpaceKind& kind, int copies);

ReportRow build_report_row(const TriadShape& shape);

/// Rows for every shape with the given scale size, lexicographic order.
/// Throws std::invalid_argument for scale < 3.
std::vector<ReportRow> enumerate_rows(int scale);

/// One-line human summary used by the classify command.
std::string render_classify_line(const ClassificationRecord& record);

/// Fixed-width table over the rows (ends with a newline).
std::string render_table(const std::vector<ReportRow>& rows);

/// CSV with header n1,n2,n3,N,components,kind,V,E,F,chi,orientable,boundary_circuits.
std::string render_csv(const std::vector<ReportRow>& rows);

/// JSON array of row objects (machine-readable survey).
std::string render_rows_json(const std::vector<ReportRow>& rows);

/// JSON object for a single classification (machine-readable classify).
std::string render_classification_json(const ClassificationRecord& record);

}  // namespace tonnetz

#endif
