#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace latgkp {

/// Alkali species line data, all fields SI.
struct AtomSpecies {
  std::string name;
  double mass = 0.0;           // kg
  double d1_wavelength = 0.0;  // m
  double d2_wavelength = 0.0;  // m
  double d1_linewidth = 0.0;   // rad/s
  double d2_linewidth = 0.0;   // rad/s

  void validate() const {
    if (mass <= 0.0) throw std::invalid_argument("species " + name + ": mass must be > 0");
    if (d2_wavelength <= 0.0 || d1_wavelength <= d2_wavelength)
      throw std::invalid_argument("species " + name +
                                  ": require d1_wavelength > d2_wavelength > 0");
    if (d1_linewidth <= 0.0 || d2_linewidth <= 0.0)
      throw std::invalid_argument("species " + name + ": linewidths must be > 0");
  }
};

inline AtomSpecies species_from_json(const nlohmann::json& j) {
  AtomSpecies s;
  s.name = j.at("name").get<std::string>();
  s.mass = j.at("mass_kg").get<double>();
  s.d1_wavelength = j.at("d1_wavelength_m").get<double>();
  s.d2_wavelength = j.at("d2_wavelength_m").get<double>();
  s.d1_linewidth = j.at("d1_linewidth_rad_s").get<double>();
  s.d2_linewidth = j.at("d2_linewidth_rad_s").get<double>();
  s.validate();
  return s;
}

/// Loads every species record from a JSON data file ({"species": [...]}).
inline std::vector<AtomSpecies> load_species_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open species file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("species file " + path + ": " + e.what());
  }
  std::vector<AtomSpecies> out;
  for (const auto& rec : j.at("species")) out.push_back(species_from_json(rec));
  if (out.empty()) throw std::invalid_argument("species file " + path + " has no records");
  return out;
}

inline AtomSpecies find_species(const std::vector<AtomSpecies>& list, const std::string& name) {
  for (const auto& s : list)
    if (s.name == name) return s;
  std::ostringstream known;
  for (const auto& s : list) known << ' ' << s.name;
  throw std::invalid_argument("unknown species '" + name + "'; available:" + known.str());
}

}  // namespace latgkp
