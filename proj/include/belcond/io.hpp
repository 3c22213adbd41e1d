#pragma once

#include <string>

#include <json.hpp>

#include "belcond/mass.hpp"

namespace belcond {

// Default slack accepted on the mass total of input documents.  Printed
// documents round to six decimals, so round-tripped totals can drift a few
// microunits away from one; qualifying inputs are rescaled to sum exactly
// one before the strict library validation runs.
inline constexpr double kDocumentSumTolerance = 1e-5;

// A parsed mass document: frame, dense masses by subset, and the optional
// explicit empty-set mass used by open-world (conjunctive) reports.
struct MassDocument {
  Frame frame;
  std::vector<double> dense;    // size 2^n, slot 0 unused
  double empty_mass = 0.0;
};

// Parses a JSON document of the form
//   { "frame": ["x", "y", "z"], "masses": { "x": 0.2, "x z": 0.5 } }
// with subset keys listing member elements separated by spaces.  Unlisted
// subsets carry mass zero.  An optional top-level "empty_mass" number is
// accepted for open-world documents; unknown fields are ignored.  Negative
// entries are allowed at this level (signed documents) -- conversion decides.
// Throws ParseError on malformed input or a total further than
// `sum_tolerance` from one.
MassDocument read_mass_document(const std::string& text,
                                double sum_tolerance = kDocumentSumTolerance);

// Conversions; both require the empty-set mass to be zero.
MassFunction to_mass_function(const MassDocument& doc);
SignedMassFunction to_signed_mass(const MassDocument& doc);

// Rounds to six decimals (the canonical display precision), mapping -0 to 0.
double round6(double x);

// {"<subset key>": mass, ...} with keys in ascending subset order; entries
// that round to zero are omitted.
nlohmann::ordered_json masses_json(const Frame& frame,
                                   const std::vector<double>& dense);

// A complete re-parsable document {"frame": [...], "masses": {...}}.
nlohmann::ordered_json document_json(const Frame& frame,
                                     const std::vector<double>& dense);

std::string write_mass_function(const MassFunction& m);

}  // namespace belcond
