#include "tonnetz/surface.hpp"

#include <deque>
#include <set>
#include <string>

#include "tonnetz/errors.hpp"

namespace tonnetz {

namespace {

std::string key_label(const SurfaceEdgeKey& k) {
  std::string out = "{" + std::to_string(k.u) + "," + std::to_string(k.v) + "}";
  if (k.copy) out += "#" + std::to_string(k.copy);
  return out;
}

// +1 when face f traverses key slot i from key.u to key.v under positive
// orientation, -1 for the reverse.
int slot_direction(const SurfaceTriangle& f, int slot) {
  const int a = f.vertices[slot];
  return a == f.edges[slot].u ? +1 : -1;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::map<SurfaceEdgeKey, std::vector<int>> edge_incidence(
    const std::vector<SurfaceTriangle>& faces) {
  std::map<SurfaceEdgeKey, std::vector<int>> incidence;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
    for (const SurfaceEdgeKey& key : faces[i].edges) incidence[key].push_back(i);
  }
  return incidence;
}

int euler_characteristic(const std::vector<SurfaceTriangle>& faces) {
  std::set<int> vertices;
  std::set<SurfaceEdgeKey> edges;
  for (const SurfaceTriangle& f : faces) {
    vertices.insert(f.vertices.begin(), f.vertices.end());
    edges.insert(f.edges.begin(), f.edges.end());
  }
  return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) +
         static_cast<int>(faces.size());
}

bool orientable(const std::vector<SurfaceTriangle>& faces) {
  const auto incidence = edge_incidence(faces);
  for (const auto& [key, incident] : incidence) {
    if (incident.size() > 2) {
      throw NotASurfaceError("orientable: edge " + key_label(key) + " lies in " +
                             std::to_string(incident.size()) + " faces");
    }
  }
  std::vector<int> sign(faces.size(), 0);
  for (int start = 0; start < static_cast<int>(faces.size()); ++start) {
    if (sign[start]) continue;
    sign[start] = +1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int slot = 0; slot < 3; ++slot) {
        const auto& incident = incidence.at(faces[i].edges[slot]);
        for (int j : incident) {
          if (j == i) continue;
          int other_slot = 0;
          while (faces[j].edges[other_slot] != faces[i].edges[slot]) ++other_slot;
          // Opposite traversal of the shared edge fixes the relative sign.
          const int wanted = -sign[i] * slot_direction(faces[i], slot) *
                             slot_direction(faces[j], other_slot);
          if (sign[j] == 0) {
            sign[j] = wanted;
            queue.push_back(j);
          } else if (sign[j] != wanted) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool is_closed_surface(const std::vector<SurfaceTriangle>& faces) {
  const auto incidence = edge_incidence(faces);
  for (const auto& [key, incident] : incidence) {
    if (incident.size() != 2) return false;
  }
  // Fan check: the faces around each vertex, linked through the edge keys at
  // that vertex, must form one closed cycle.
  std::map<int, std::vector<int>> faces_at_vertex;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
    for (int v : faces[i].vertices) faces_at_vertex[v].push_back(i);
  }
  for (const auto& [v, around] : faces_at_vertex) {
    std::map<SurfaceEdgeKey, std::vector<int>> local;
    for (int i : around) {
      for (const SurfaceEdgeKey& key : faces[i].edges) {
        if (key.u == v || key.v == v) local[key].push_back(i);
      }
    }
    // A cycle over |around| nodes needs exactly |around| connecting edges,
    // each joining two faces, and a connected fan.
    if (local.size() != around.size()) return false;
    for (const auto& [key, incident] : local) {
      if (incident.size() != 2) return false;
    }
    std::map<int, std::vector<int>> adjacency;
    for (const auto& [key, incident] : local) {
      adjacency[incident[0]].push_back(incident[1]);
      adjacency[incident[1]].push_back(incident[0]);
    }
    std::set<int> seen{around.front()};
    std::deque<int> queue{around.front()};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j : adjacency[i]) {
        if (seen.insert(j).second) queue.push_back(j);
      }
    }
    if (seen.size() != around.size()) return false;
  }
  return true;
}

int face_component_count(const std::vector<SurfaceTriangle>& faces) {
  DisjointSet dsu(static_cast<int>(faces.size()));
  for (const auto& [key, incident] : edge_incidence(faces)) {
    for (std::size_t i = 1; i < incident.size(); ++i) dsu.unite(incident[0], incident[i]);
  }
  std::set<int> roots;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) roots.insert(dsu.find(i));
  return static_cast<int>(roots.size());
}

}  // namespace tonnetz
