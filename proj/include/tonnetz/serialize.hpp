#ifndef TONNETZ_SERIALIZE_HPP
#define TONNETZ_SERIALIZE_HPP

#include <string>

#include "tonnetz/complex.hpp"

namespace tonnetz {

/// JSON document with the shape, vertex list, edge pairs, face triples, and
/// the closed-form classification.
std::string complex_to_json(const TonnetzComplex& complex);

/// Rebuild a complex from an exported document, checking that the listed
/// simplices are exactly those of the declared shape. Throws
/// std::invalid_argument on malformed or inconsistent input.
TonnetzComplex complex_from_json(const std::string& text);

/// Undirected DOT graph of the face adjacency: one node per face, one edge
/// per pair of faces sharing a 1-simplex; tritone adjacencies are dashed.
std::string face_graph_dot(const TonnetzComplex& complex);

}  // namespace tonnetz

#endif
