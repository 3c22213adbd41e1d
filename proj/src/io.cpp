#include "belcond/io.hpp"

#include <cmath>

namespace belcond {

using nlohmann::json;
using nlohmann::ordered_json;

MassDocument read_mass_document(const std::string& text,
                                double sum_tolerance) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (!doc.contains("frame") || !doc["frame"].is_array()) {
    throw ParseError("document needs a \"frame\" array of element names");
  }
  if (!doc.contains("masses") || !doc["masses"].is_object()) {
    throw ParseError("document needs a \"masses\" object");
  }

  std::vector<std::string> names;
  for (const auto& item : doc["frame"]) {
    if (!item.is_string()) throw ParseError("frame entries must be strings");
    names.push_back(item.get<std::string>());
  }
  MassDocument out{[&] {
                     try {
                       return Frame(std::move(names));
                     } catch (const Error& e) {
                       throw ParseError(e.what());
                     }
                   }(),
                   {},
                   0.0};
  out.dense.assign(out.frame.subset_count(), 0.0);

  for (const auto& [key, value] : doc["masses"].items()) {
    if (!value.is_number()) {
      throw ParseError("mass of '" + key + "' must be a number");
    }
    const Subset subset = out.frame.subset_from_key(key);
    if (subset == kEmptySet) {
      throw ParseError(
          "subset key '" + key +
          "' names the empty set; use the top-level \"empty_mass\" field");
    }
    out.dense[subset] += value.get<double>();
  }
  if (doc.contains("empty_mass")) {
    if (!doc["empty_mass"].is_number()) {
      throw ParseError("\"empty_mass\" must be a number");
    }
    out.empty_mass = doc["empty_mass"].get<double>();
  }

  double total = out.empty_mass;
  for (double x : out.dense) total += x;
  if (std::abs(total - 1.0) > sum_tolerance) {
    throw ParseError("masses sum to " + std::to_string(total) +
                     ", further than " + std::to_string(sum_tolerance) +
                     " from 1");
  }
  if (total != 1.0 && total > 0.0) {
    for (double& x : out.dense) x /= total;
    out.empty_mass /= total;
  }
  return out;
}

MassFunction to_mass_function(const MassDocument& doc) {
  if (std::abs(doc.empty_mass) > tol::kAnalytic) {
    throw InvalidMass("document carries mass " +
                      std::to_string(doc.empty_mass) + " on the empty set");
  }
  return MassFunction(doc.frame, doc.dense);
}

SignedMassFunction to_signed_mass(const MassDocument& doc) {
  if (std::abs(doc.empty_mass) > tol::kAnalytic) {
    throw InvalidMass("document carries mass " +
                      std::to_string(doc.empty_mass) + " on the empty set");
  }
  return SignedMassFunction(doc.frame, doc.dense);
}

double round6(double x) {
  const double r = std::round(x * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;  // squash -0
}

ordered_json masses_json(const Frame& frame, const std::vector<double>& dense) {
  ordered_json out = ordered_json::object();
  for (Subset a = 1; a < dense.size(); ++a) {
    const double r = round6(dense[a]);
    if (r != 0.0) out[frame.subset_key(a)] = r;
  }
  return out;
}

ordered_json document_json(const Frame& frame,
                           const std::vector<double>& dense) {
  ordered_json out;
  out["frame"] = frame.names();
  out["masses"] = masses_json(frame, dense);
  return out;
}

std::string write_mass_function(const MassFunction& m) {
  return document_json(m.frame(), m.dense()).dump(2) + "\n";
}

}  // namespace belcond
