#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oacd/diagram.hpp"
#include "oacd/topo.hpp"

namespace oacd {

enum class PointFormat { Csv, Json };

// "x,y" per line; blank lines, '#' comments and an "x,y" header are skipped.
GeneratorSet read_points_csv(std::istream& in);
// [[x,y],...] with integers, "p/q" or decimal strings, or floats whose value is
// exactly the shortest decimal that prints them (0.5 yes, 0.1 no).
GeneratorSet read_points_json(const nlohmann::json& j);
GeneratorSet read_points(std::istream& in, PointFormat format);
// "-" reads stdin. Format guessed from the extension when not given.
GeneratorSet read_points_file(const std::string& path, std::optional<PointFormat> format = std::nullopt);

nlohmann::json point_json(const Point2& p);
nlohmann::json particle_json(const FullOACD& d, int particle);
nlohmann::json diagram_json(const FullOACD& d);
std::string diagram_table(const FullOACD& d);
// Codes and kinds back from diagram_json output.
std::vector<Particle> particles_from_json(const nlohmann::json& j);

nlohmann::json verdict_json(const RelationVerdict& v);
std::string verdict_table(const RelationVerdict& v);

nlohmann::json validation_json(const ValidationReport& r);

}  // namespace oacd
