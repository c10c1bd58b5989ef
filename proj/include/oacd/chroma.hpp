#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oacd/arrangement.hpp"

namespace oacd {

// Components stored doubled: doubled[i] = 2 t_i.
class ChromaticCode {
 public:
  ChromaticCode() = default;
  // Throws BadCode unless 0 <= d <= 2(n-1) and the sum is n(n-1).
  explicit ChromaticCode(std::vector<int> doubled);

  std::size_t size() const { return d_.size(); }
  int operator[](std::size_t i) const { return d_[i]; }
  const std::vector<int>& doubled() const { return d_; }
  bool is_integer(std::size_t i) const { return d_[i] % 2 == 0; }

  friend auto operator<=>(const ChromaticCode&, const ChromaticCode&) = default;
  friend bool operator==(const ChromaticCode&, const ChromaticCode&) = default;

 private:
  std::vector<int> d_;
};

struct ChromaticCodeHash {
  std::size_t operator()(const ChromaticCode& c) const noexcept;
};

struct Base {
  std::vector<int> sorted;  // doubled, ascending
  friend bool operator==(const Base&, const Base&) = default;
  friend auto operator<=>(const Base&, const Base&) = default;
};

enum class ParticleKind { Cell, Edge, Vertex2I, Vertex3I };
std::string_view to_string(ParticleKind kind);

struct Particle {
  ParticleKind kind = ParticleKind::Cell;
  ChromaticCode code;
  std::optional<GeomRef> geom;
};

// Component-wise sums, no range invariant.
struct ComplexCode {
  std::vector<int> doubled;
  friend bool operator==(const ComplexCode&, const ComplexCode&) = default;
};

struct DiffTuple {
  std::vector<int> psi;  // doubled |a_i - b_i|
};

ChromaticCode code_from_signs(const SignVector& sv, const std::vector<std::pair<int, int>>& pairs, std::size_t n);
std::vector<std::pair<int, int>> bisector_pairs(const std::vector<Bisector>& lines);

Base base(const ChromaticCode& c);
bool equi_color(const ChromaticCode& a, const ChromaticCode& b);
bool equi_base(const ChromaticCode& a, const ChromaticCode& b);

// H(c, m) with m given doubled.
int count_components(const ChromaticCode& c, int doubled_value);

DiffTuple diff_tuple(const ChromaticCode& a, const ChromaticCode& b);
int chrom_dist(const ChromaticCode& a, const ChromaticCode& b);  // doubled delta
int code_dist(const ChromaticCode& a, const ChromaticCode& b);   // gamma
inline int transition_number(const ChromaticCode& a, const ChromaticCode& b) { return chrom_dist(a, b); }

ComplexCode complex_code(std::span<const ChromaticCode> members);
// Scales a complex by 1/m when the result is a valid particle code.
std::optional<ChromaticCode> divide(const ComplexCode& c, int m);

std::optional<ParticleKind> try_classify_kind(const ChromaticCode& c);
ParticleKind classify_kind(const ChromaticCode& c);  // throws NotAParticle

// Closed-form bases of each kind for n generators.
std::vector<Base> closed_form_bases(ParticleKind kind, std::size_t n);

// "07A247" when every doubled value is < 36, else "d:0,7,10,...".
std::string format_code(const ChromaticCode& c);
ChromaticCode parse_code(std::string_view s, std::size_t n);
// Length inferred from the string.
ChromaticCode parse_code(std::string_view s);

// Paper units: "7/2" style components, "(0,7/2,5,1,2,7/2)".
std::string format_tuple(const ChromaticCode& c);
std::string format_half(int doubled);  // "3.5", "2"

}  // namespace oacd
