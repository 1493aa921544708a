#pragma once

#include <string>
#include <vector>

#include "mwl/basechange.hpp"
#include "mwl/factor.hpp"
#include "mwl/heights.hpp"
#include "mwl/multipoly.hpp"
#include "mwl/section.hpp"

namespace mwl {

// Polynomial text syntax: `c*v^k` terms joined by + and -, variables are
// ASCII identifiers, coefficients exact rationals p/q.
std::string to_text(const QPoly& p, const std::string& var);
std::string to_text(const MultiPoly& p);
QPoly qpoly_from_text(const std::string& s, const std::string& var);
MultiPoly multipoly_from_text(const std::string& s);

std::string to_text(const Factorization& f, const std::string& var);

// Section data files (schema 1): tower description plus coefficient maps.
std::string sections_to_json(const SurfaceModel& surface, const std::vector<Section>& sections);
std::vector<Section> sections_from_json(const std::string& text);
// All-or-nothing load with per-section verification.
std::vector<Section> ingest_sections(const std::string& path);
void write_sections_file(const std::string& path, const SurfaceModel& surface,
                         const std::vector<Section>& sections);

std::string gram_to_json(const GramMatrix& g);
std::string gram_to_text(const GramMatrix& g);

std::string report_to_json(const MasterReport& r);
std::string report_to_text(const MasterReport& r);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace mwl
