#include "oacd/diagram.hpp"

namespace oacd {

ParticleKind geometric_kind(const Arrangement& arr, GeomRef ref) {
  switch (ref.dim) {
    case Dim::Face: return ParticleKind::Cell;
    case Dim::Edge: return ParticleKind::Edge;
    case Dim::Vertex:
      return arr.vertices()[ref.id].kind == VertexKind::TwoI ? ParticleKind::Vertex2I : ParticleKind::Vertex3I;
  }
  return ParticleKind::Cell;
}

FullOACD FullOACD::build(const GeneratorSet& g) {
  FullOACD d;
  d.arr_ = build_arrangement(g);
  const auto pairs = bisector_pairs(d.arr_.bisectors());
  auto add = [&](Dim dim, std::size_t count) {
    for (std::size_t id = 0; id < count; ++id) {
      GeomRef ref{dim, static_cast<int>(id)};
      Particle p;
      p.kind = geometric_kind(d.arr_, ref);
      p.code = code_from_signs(d.arr_.label(ref), pairs, g.size());
      p.geom = ref;
      // First occurrence wins; duplicates stay visible in the particle list.
      d.index_.emplace(p.code, static_cast<int>(d.particles_.size()));
      d.particles_.push_back(std::move(p));
    }
  };
  add(Dim::Face, d.arr_.faces().size());
  add(Dim::Edge, d.arr_.edges().size());
  add(Dim::Vertex, d.arr_.vertices().size());
  return d;
}

std::optional<int> FullOACD::find(const ChromaticCode& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FullOACD::particle_of(GeomRef ref) const {
  const int nf = static_cast<int>(arr_.faces().size());
  const int ne = static_cast<int>(arr_.edges().size());
  switch (ref.dim) {
    case Dim::Face: return ref.id;
    case Dim::Edge: return nf + ref.id;
    case Dim::Vertex: return nf + ne + ref.id;
  }
  return -1;
}

}  // namespace oacd
