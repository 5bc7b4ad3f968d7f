#pragma once

// File formats.
//
// Code file (JSON), node indices 1-based:
//   { "q", "n", "k", "d", "alpha", "beta", "B",
//     "G": [[...], ...],                       // B rows of n*alpha residues
//     "repair": { "<j>": { "<i>": { "D": rows, "C": rows } } } }   // optional
//
// Curve file: CSV with header
//   curve_label,alpha_over_B_num,alpha_over_B_den,beta_over_B_num,beta_over_B_den
// or a JSON array of objects carrying the same five fields.

#include "regen/bounds.hpp"
#include "regen/code_model.hpp"
#include "regen/dual_chain.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace regen {

/// Malformed input; the message names the offending location.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CodeFile {
  RegenCode code;
  std::optional<RepairScheme> scheme;
};

CodeFile code_from_json(const nlohmann::json& doc);
CodeFile parse_code(const std::string& text);
CodeFile read_code_file(const std::string& path);

nlohmann::json code_to_json(const RegenCode& code, const RepairScheme* scheme = nullptr);

nlohmann::json rational_to_json(const Rational& r);
nlohmann::json to_json(const DataCollectionReport& report);
nlohmann::json to_json(const ExactRepairReport& report);
nlohmann::json to_json(const CertificationReport& report);
nlohmann::json chain_report_json(const DualChain& chain, const ChainCertificate& cert);

struct CurveRow {
  std::string label;
  NormalizedPoint point;
};

void write_curves_csv(std::ostream& out, const std::vector<TradeoffCurve>& curves);
nlohmann::json curves_to_json(const std::vector<TradeoffCurve>& curves);
std::vector<CurveRow> parse_curves_csv(std::istream& in);
std::vector<CurveRow> curves_from_json(const nlohmann::json& doc);

}  // namespace regen
