#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "oacd/exact_geom.hpp"

namespace oacd {

enum class Sign : signed char { Neg = -1, Zero = 0, Pos = 1 };
using SignVector = std::vector<Sign>;

enum class VertexKind { TwoI, ThreeI };

// -1 in a vertex slot means "at infinity".
struct ArrVertex {
  Point2 location;
  std::vector<int> zero_set;  // bisector indices, ascending
  VertexKind kind = VertexKind::TwoI;
  std::vector<int> outgoing;  // half-edge ids, counterclockwise by direction
};

struct HalfEdge {
  int edge = -1;
  int origin = -1;
  int target = -1;
  int face = -1;
  int twin = -1;
  int next = -1;
  Point2 dir;  // integer direction of travel
};

// Half-edge 2e runs along the carrier direction, 2e+1 against it.
struct ArrEdge {
  int carrier = -1;
  int from = -1;
  int to = -1;
  bool bounded() const { return from >= 0 && to >= 0; }
};

struct ArrFace {
  int first = -1;  // lowest half-edge id on the boundary cycle
  bool bounded = false;
};

enum class Dim { Face, Edge, Vertex };

struct GeomRef {
  Dim dim = Dim::Face;
  int id = -1;
  friend bool operator==(const GeomRef&, const GeomRef&) = default;
};

// Cyclic counterclockwise order around the vertex:
// edges[0], faces[0], edges[1], faces[1], ...; faces[i] lies between edges[i] and edges[i+1].
struct Unit {
  int vertex = -1;
  VertexKind kind = VertexKind::TwoI;
  std::vector<int> edges;
  std::vector<int> faces;
};

class DegenerateInputError : public Error {
 public:
  explicit DegenerateInputError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class Arrangement {
 public:
  const GeneratorSet& generators() const { return gens_; }
  const std::vector<Bisector>& bisectors() const { return lines_; }
  const std::vector<ArrVertex>& vertices() const { return vertices_; }
  const std::vector<ArrEdge>& edges() const { return edges_; }
  const std::vector<ArrFace>& faces() const { return faces_; }
  const std::vector<HalfEdge>& half_edges() const { return half_; }

  // Sign vector obtained by propagating across edges from one seed face.
  const SignVector& label(GeomRef ref) const;
  const Point2& rep_point(GeomRef ref) const;

  // {face left of the carrier direction (Neg side), face on the Pos side}
  std::array<int, 2> faces_of_edge(int e) const;
  std::vector<int> face_cycle(int f) const;
  std::vector<int> face_edges(int f) const;
  std::vector<int> face_vertices(int f) const;
  std::vector<int> vertex_edges(int v) const;
  std::vector<int> vertex_faces(int v) const;

  friend Arrangement build_arrangement(const GeneratorSet& g);

 private:
  GeneratorSet gens_;
  std::vector<Bisector> lines_;
  std::vector<ArrVertex> vertices_;
  std::vector<ArrEdge> edges_;
  std::vector<HalfEdge> half_;
  std::vector<ArrFace> faces_;
  std::vector<SignVector> face_sv_, edge_sv_, vertex_sv_;
  std::vector<Point2> face_pt_, edge_pt_;
};

// Throws DegenerateInputError when validation reports violations.
Arrangement build_arrangement(const GeneratorSet& g);

SignVector classify_point(const std::vector<Bisector>& lines, const Point2& p);
// Classification of the particle's representative point.
SignVector sign_vector(const Arrangement& arr, GeomRef ref);
Point2 representative_point(const Arrangement& arr, GeomRef ref);

// Throws MalformedUnit on a degree mismatch.
std::vector<Unit> enumerate_units(const Arrangement& arr);

}  // namespace oacd
