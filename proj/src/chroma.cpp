#include "oacd/chroma.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace oacd {

namespace {

void require_same_length(const ChromaticCode& a, const ChromaticCode& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::LengthMismatch, std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

const char* kDigits = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

int digit_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'A' && ch <= 'Z') return ch - 'A' + 10;
  if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
  return -1;
}

}  // namespace

ChromaticCode::ChromaticCode(std::vector<int> doubled) : d_(std::move(doubled)) {
  const long n = static_cast<long>(d_.size());
  if (n < 2) throw Error(ErrorCode::BadCode, "code needs at least 2 components");
  long sum = 0;
  for (int v : d_) {
    if (v < 0 || v > 2 * (n - 1)) throw Error(ErrorCode::BadCode, "component out of range: " + std::to_string(v));
    sum += v;
  }
  if (sum != n * (n - 1)) throw Error(ErrorCode::BadCode, "component sum " + std::to_string(sum) + " != " + std::to_string(n * (n - 1)));
}

std::size_t ChromaticCodeHash::operator()(const ChromaticCode& c) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : c.doubled()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

std::string_view to_string(ParticleKind kind) {
  switch (kind) {
    case ParticleKind::Cell: return "cell";
    case ParticleKind::Edge: return "edge";
    case ParticleKind::Vertex2I: return "vertex2I";
    case ParticleKind::Vertex3I: return "vertex3I";
  }
  return "?";
}

std::vector<std::pair<int, int>> bisector_pairs(const std::vector<Bisector>& lines) {
  std::vector<std::pair<int, int>> out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.emplace_back(l.i, l.j);
  return out;
}

ChromaticCode code_from_signs(const SignVector& sv, const std::vector<std::pair<int, int>>& pairs, std::size_t n) {
  if (sv.size() != pairs.size()) throw Error(ErrorCode::LengthMismatch, "sign vector vs bisector list");
  std::vector<int> d(n, 0);
  for (std::size_t k = 0; k < sv.size(); ++k) {
    auto [i, j] = pairs[k];
    switch (sv[k]) {
      case Sign::Neg: d[i] += 2; break;
      case Sign::Pos: d[j] += 2; break;
      case Sign::Zero: d[i] += 1; d[j] += 1; break;
    }
  }
  return ChromaticCode(std::move(d));
}

Base base(const ChromaticCode& c) {
  Base b{c.doubled()};
  std::sort(b.sorted.begin(), b.sorted.end());
  return b;
}

bool equi_color(const ChromaticCode& a, const ChromaticCode& b) {
  require_same_length(a, b);
  return a == b;
}

bool equi_base(const ChromaticCode& a, const ChromaticCode& b) {
  require_same_length(a, b);
  return base(a) == base(b);
}

int count_components(const ChromaticCode& c, int doubled_value) {
  return static_cast<int>(std::count(c.doubled().begin(), c.doubled().end(), doubled_value));
}

DiffTuple diff_tuple(const ChromaticCode& a, const ChromaticCode& b) {
  require_same_length(a, b);
  DiffTuple t;
  t.psi.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) t.psi[i] = std::abs(a[i] - b[i]);
  return t;
}

int chrom_dist(const ChromaticCode& a, const ChromaticCode& b) {
  require_same_length(a, b);
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

int code_dist(const ChromaticCode& a, const ChromaticCode& b) {
  require_same_length(a, b);
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] != b[i];
  return s;
}

ComplexCode complex_code(std::span<const ChromaticCode> members) {
  if (members.empty()) throw Error(ErrorCode::EmptyCluster, "complex with no members");
  ComplexCode out{std::vector<int>(members.front().size(), 0)};
  for (const auto& m : members) {
    if (m.size() != out.doubled.size()) throw Error(ErrorCode::LengthMismatch, "complex member length");
    for (std::size_t i = 0; i < m.size(); ++i) out.doubled[i] += m[i];
  }
  return out;
}

std::optional<ChromaticCode> divide(const ComplexCode& c, int m) {
  std::vector<int> d(c.doubled.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (c.doubled[i] % m != 0) return std::nullopt;
    d[i] = c.doubled[i] / m;
  }
  try {
    return ChromaticCode(std::move(d));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<ParticleKind> try_classify_kind(const ChromaticCode& c) {
  const std::size_t n = c.size();
  long sum = 0;
  std::map<int, int> ints, halves;
  for (int v : c.doubled()) {
    sum += v;
    (v % 2 == 0 ? ints : halves)[v]++;
  }
  if (sum != static_cast<long>(n) * static_cast<long>(n - 1)) return std::nullopt;
  auto all_distinct = [](const std::map<int, int>& m) {
    return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second == 1; });
  };
  std::size_t nh = 0;
  for (auto& [v, cnt] : halves) nh += cnt;
  if (nh == 0) {
    if (all_distinct(ints)) return ParticleKind::Cell;
    int triples = 0, others = 0;
    for (auto& [v, cnt] : ints) {
      if (cnt == 3) ++triples;
      else if (cnt != 1) ++others;
    }
    if (triples == 1 && others == 0) return ParticleKind::Vertex3I;
    return std::nullopt;
  }
  if (!all_distinct(ints)) return std::nullopt;
  if (nh == 2 && halves.size() == 1) return ParticleKind::Edge;
  if (nh == 4 && halves.size() == 2 && halves.begin()->second == 2) return ParticleKind::Vertex2I;
  return std::nullopt;
}

ParticleKind classify_kind(const ChromaticCode& c) {
  auto k = try_classify_kind(c);
  if (!k) throw Error(ErrorCode::NotAParticle, format_code(c));
  return *k;
}

std::vector<Base> closed_form_bases(ParticleKind kind, std::size_t n) {
  const int ni = static_cast<int>(n);
  auto without = [&](std::vector<int> drop, std::vector<int> add) {
    Base b;
    for (int w = 0; w < ni; ++w)
      if (std::find(drop.begin(), drop.end(), w) == drop.end()) b.sorted.push_back(2 * w);
    for (int a : add) b.sorted.push_back(a);
    std::sort(b.sorted.begin(), b.sorted.end());
    return b;
  };
  std::vector<Base> out;
  switch (kind) {
    case ParticleKind::Cell:
      out.push_back(without({}, {}));
      break;
    case ParticleKind::Edge:
      for (int z = 0; z + 1 < ni; ++z) out.push_back(without({z, z + 1}, {2 * z + 1, 2 * z + 1}));
      break;
    case ParticleKind::Vertex2I:
      for (int z1 = 0; z1 + 3 < ni; ++z1)
        for (int z2 = z1 + 2; z2 + 1 < ni; ++z2)
          out.push_back(without({z1, z1 + 1, z2, z2 + 1}, {2 * z1 + 1, 2 * z1 + 1, 2 * z2 + 1, 2 * z2 + 1}));
      break;
    case ParticleKind::Vertex3I:
      for (int z = 0; z + 2 < ni; ++z) out.push_back(without({z, z + 1, z + 2}, {2 * z + 2, 2 * z + 2, 2 * z + 2}));
      break;
  }
  return out;
}

std::string format_code(const ChromaticCode& c) {
  bool compact = std::all_of(c.doubled().begin(), c.doubled().end(), [](int v) { return v < 36; });
  std::string s;
  if (compact) {
    for (int v : c.doubled()) s += kDigits[v];
    return s;
  }
  s = "d:";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

ChromaticCode parse_code(std::string_view s) {
  std::vector<int> d;
  if (s.substr(0, 2) == "d:") {
    std::string rest(s.substr(2));
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw Error(ErrorCode::BadDigit, "bad component '" + item + "'");
      d.push_back(std::stoi(item));
    }
  } else {
    for (char ch : s) {
      int v = digit_value(ch);
      if (v < 0) throw Error(ErrorCode::BadDigit, std::string("bad digit '") + ch + "'");
      d.push_back(v);
    }
  }
  return ChromaticCode(std::move(d));
}

ChromaticCode parse_code(std::string_view s, std::size_t n) {
  std::size_t len = s.substr(0, 2) == "d:" ? static_cast<std::size_t>(std::count(s.begin(), s.end(), ',') + 1) : s.size();
  if (len != n) throw Error(ErrorCode::LengthMismatch, "code '" + std::string(s) + "' has " + std::to_string(len) + " components, expected " + std::to_string(n));
  return parse_code(s);
}

std::string format_half(int doubled) {
  std::string s = std::to_string(doubled / 2);
  if (doubled % 2 != 0) {
    if (doubled < 0 && doubled / 2 == 0) s = "-0";
    s += ".5";
  }
  return s;
}

std::string format_tuple(const ChromaticCode& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += c[i] % 2 == 0 ? std::to_string(c[i] / 2) : std::to_string(c[i]) + "/2";
  }
  return s + ")";
}

}  // namespace oacd
