#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "oacd/arrangement.hpp"
#include "oacd/chroma.hpp"

namespace oacd {

// A full-coded diagram: arrangement plus one coded particle per face, edge and vertex.
// Particles are ordered faces, then edges, then vertices.
class FullOACD {
 public:
  // Throws DegenerateInputError for inputs outside general position.
  static FullOACD build(const GeneratorSet& g);

  std::size_t n() const { return arr_.generators().size(); }
  const GeneratorSet& generators() const { return arr_.generators(); }
  const Arrangement& arrangement() const { return arr_; }
  const std::vector<Particle>& particles() const { return particles_; }

  std::optional<int> find(const ChromaticCode& c) const;
  bool realized(const ChromaticCode& c) const { return find(c).has_value(); }
  int particle_of(GeomRef ref) const;
  GeomRef geom_of(int particle) const { return *particles_[particle].geom; }

 private:
  Arrangement arr_;
  std::vector<Particle> particles_;
  std::unordered_map<ChromaticCode, int, ChromaticCodeHash> index_;
};

ParticleKind geometric_kind(const Arrangement& arr, GeomRef ref);

}  // namespace oacd
