#include "regen/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace regen {

using nlohmann::json;

namespace {

const json& field_of(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw FormatError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(where + ": missing field '" + key + "'");
  return *it;
}

std::int64_t integer_of(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw FormatError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

int small_int(const json& obj, const std::string& key) {
  const std::int64_t v = integer_of(field_of(obj, key, ""), "/" + key);
  if (v < 0 || v > std::numeric_limits<int>::max()) {
    throw FormatError("/" + key + ": value out of range");
  }
  return static_cast<int>(v);
}

Matrix matrix_of(const json& rows, Index expect_rows, Index expect_cols, Residue q,
                 const std::string& where) {
  if (!rows.is_array()) throw FormatError(where + ": expected an array of rows");
  if (static_cast<Index>(rows.size()) != expect_rows) {
    throw FormatError(where + ": has " + std::to_string(rows.size()) + " rows, expected " +
                      std::to_string(expect_rows));
  }
  Matrix m(expect_rows, expect_cols);
  for (Index r = 0; r < expect_rows; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    const std::string row_where = where + "/" + std::to_string(r);
    if (!row.is_array() || static_cast<Index>(row.size()) != expect_cols) {
      throw FormatError(row_where + ": expected a row of " + std::to_string(expect_cols) + " entries");
    }
    for (Index c = 0; c < expect_cols; ++c) {
      const std::string cell = row_where + "/" + std::to_string(c);
      const std::int64_t v = integer_of(row[static_cast<std::size_t>(c)], cell);
      if (v < 0 || v >= q) {
        throw FormatError(cell + ": entry " + std::to_string(v) + " is not a residue in [0, " +
                          std::to_string(q) + ")");
      }
      m(r, c) = v;
    }
  }
  return m;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

BigInt big_of(const json& v, const std::string& where) {
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  if (v.is_string()) return BigInt(v.get<std::string>());
  throw FormatError(where + ": expected an integer");
}

}  // namespace

CodeFile code_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("code file: top level must be an object");
  CodeParams p;
  p.q = integer_of(field_of(doc, "q", ""), "/q");
  p.n = small_int(doc, "n");
  p.k = small_int(doc, "k");
  p.d = small_int(doc, "d");
  p.alpha = small_int(doc, "alpha");
  p.beta = small_int(doc, "beta");
  p.B = small_int(doc, "B");
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }

  Matrix g = matrix_of(field_of(doc, "G", ""), p.B, p.length(), p.q, "/G");
  CodeFile file{RegenCode(p, std::move(g)), std::nullopt};

  auto repair = doc.find("repair");
  if (repair == doc.end() || repair->is_null()) return file;
  if (!repair->is_object()) throw FormatError("/repair: expected an object");

  RepairScheme scheme(p.n);
  for (int j = 1; j <= p.n; ++j) {
    const std::string jw = "/repair/" + std::to_string(j);
    const json& per_node = field_of(*repair, std::to_string(j), "/repair");
    for (int i = 1; i <= p.n; ++i) {
      if (i == j) continue;
      const std::string iw = jw + "/" + std::to_string(i);
      const json& maps = field_of(per_node, std::to_string(i), jw);
      scheme.set(j - 1, i - 1,
                 {matrix_of(field_of(maps, "D", iw), p.beta, p.alpha, p.q, iw + "/D"),
                  matrix_of(field_of(maps, "C", iw), p.alpha, p.beta, p.q, iw + "/C")});
    }
    for (const auto& [key, value] : per_node.items()) {
      int helper = 0;
      try {
        helper = std::stoi(key);
      } catch (const std::exception&) {
        throw FormatError(jw + ": unexpected key '" + key + "'");
      }
      if (helper < 1 || helper > p.n || helper == j) {
        throw FormatError(jw + ": helper index " + key + " out of range");
      }
    }
  }
  for (const auto& [key, value] : repair->items()) {
    int node = 0;
    try {
      node = std::stoi(key);
    } catch (const std::exception&) {
      throw FormatError("/repair: unexpected key '" + key + "'");
    }
    if (node < 1 || node > p.n) throw FormatError("/repair: node index " + key + " out of range");
  }
  file.scheme = std::move(scheme);
  return file;
}

CodeFile parse_code(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("JSON syntax error: ") + e.what());
  }
  return code_from_json(doc);
}

CodeFile read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_code(buffer.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

json code_to_json(const RegenCode& code, const RepairScheme* scheme) {
  const CodeParams& p = code.params();
  json doc{{"q", p.q},         {"n", p.n},       {"k", p.k}, {"d", p.d},
           {"alpha", p.alpha}, {"beta", p.beta}, {"B", p.B}, {"G", matrix_json(code.generator())}};
  if (scheme != nullptr) {
    json repair = json::object();
    for (int j = 0; j < p.n; ++j) {
      json per_node = json::object();
      for (int i = 0; i < p.n; ++i) {
        if (i == j) continue;
        const RepairMaps& maps = scheme->at(j, i);
        per_node[std::to_string(i + 1)] = {{"D", matrix_json(maps.download)},
                                           {"C", matrix_json(maps.combine)}};
      }
      repair[std::to_string(j + 1)] = std::move(per_node);
    }
    doc["repair"] = std::move(repair);
  }
  return doc;
}

json rational_to_json(const Rational& r) { return {{"num", big_json(num(r))}, {"den", big_json(den(r))}}; }

json to_json(const DataCollectionReport& report) {
  json subsets = json::array();
  for (const auto& subset : report.failing_subsets) {
    json s = json::array();
    for (int node : subset) s.push_back(node + 1);
    subsets.push_back(std::move(s));
  }
  return {{"pass", report.pass}, {"generator_rank", report.generator_rank},
          {"failing_subsets", std::move(subsets)}};
}

json to_json(const ExactRepairReport& report) {
  json nodes = json::array();
  for (int node : report.failing_nodes) nodes.push_back(node + 1);
  return {{"pass", report.pass}, {"failing_nodes", std::move(nodes)}};
}

json to_json(const CertificationReport& report) {
  json checks = json::array();
  std::size_t violations = 0;
  for (const Check& c : report.checks) {
    violations += c.holds ? 0 : 1;
    json entry{{"part", c.part},
               {"relation", c.relation},
               {"lhs", rational_to_json(c.lhs)},
               {"rhs", rational_to_json(c.rhs)},
               {"margin", rational_to_json(c.margin())},
               {"holds", c.holds}};
    if (c.t != 0) entry["t"] = c.t;
    if (c.j != 0) entry["j"] = c.j;
    if (c.s != 0) entry["s"] = c.s;
    checks.push_back(std::move(entry));
  }
  return {{"name", report.name}, {"pass", report.pass()}, {"violations", violations},
          {"checks", std::move(checks)}};
}

json chain_report_json(const DualChain& chain, const ChainCertificate& cert) {
  json levels = json::array();
  for (const ChainLevel& level : chain.levels()) {
    const LevelStats& s = chain.stats(level.t);
    json columns = json::array();
    json thick_ranks = json::object();
    json delta = json::object();
    json slack = json::object();
    for (int j = level.first; j < chain.n(); ++j) {
      const auto key = std::to_string(j + 1);
      const auto idx = static_cast<std::size_t>(j);
      columns.push_back(j + 1);
      thick_ranks[key] = s.thick_ranks[idx];
      delta[key] = s.delta[idx];
      if (s.slack[idx]) slack[key] = *s.slack[idx];
    }
    json block_ranks = json::array();
    for (int i = 0; i < chain.n(); ++i) {
      json row = json::array();
      for (int j = level.first; j < chain.n(); ++j) {
        row.push_back(s.block_ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
      block_ranks.push_back(std::move(row));
    }
    levels.push_back({{"t", level.t},
                      {"rank", s.rank},
                      {"columns", std::move(columns)},
                      {"thick_ranks", std::move(thick_ranks)},
                      {"delta", std::move(delta)},
                      {"slack", std::move(slack)},
                      {"block_ranks", std::move(block_ranks)}});
  }
  return {{"n", chain.n()},
          {"alpha", chain.alpha()},
          {"q", chain.field().modulus()},
          {"levels", std::move(levels)},
          {"certification",
           {{"lemma4", to_json(cert.lemma4)},
            {"theorem6", to_json(cert.theorem6)},
            {"cascade", to_json(cert.cascade)},
            {"appendixB_slack", to_json(cert.slack)}}},
          {"pass", cert.pass()}};
}

namespace {

constexpr const char* kCurveHeader =
    "curve_label,alpha_over_B_num,alpha_over_B_den,beta_over_B_num,beta_over_B_den";

}  // namespace

void write_curves_csv(std::ostream& out, const std::vector<TradeoffCurve>& curves) {
  out << kCurveHeader << '\n';
  for (const TradeoffCurve& curve : curves) {
    for (const NormalizedPoint& p : curve.points) {
      out << curve.label << ',' << num(p.alpha_over_B) << ',' << den(p.alpha_over_B) << ','
          << num(p.beta_over_B) << ',' << den(p.beta_over_B) << '\n';
    }
  }
}

json curves_to_json(const std::vector<TradeoffCurve>& curves) {
  json rows = json::array();
  for (const TradeoffCurve& curve : curves) {
    for (const NormalizedPoint& p : curve.points) {
      rows.push_back({{"curve_label", curve.label},
                      {"alpha_over_B_num", big_json(num(p.alpha_over_B))},
                      {"alpha_over_B_den", big_json(den(p.alpha_over_B))},
                      {"beta_over_B_num", big_json(num(p.beta_over_B))},
                      {"beta_over_B_den", big_json(den(p.beta_over_B))}});
    }
  }
  return rows;
}

namespace {

Rational checked_ratio(const BigInt& n, const BigInt& d, const std::string& where) {
  if (d <= 0) throw FormatError(where + ": denominator must be positive");
  Rational r(n, d);
  if (num(r) != n || den(r) != d) throw FormatError(where + ": fraction is not reduced");
  return r;
}

}  // namespace

std::vector<CurveRow> parse_curves_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCurveHeader) {
    throw FormatError("curve CSV: line 1: unexpected header");
  }
  std::vector<CurveRow> rows;
  for (int line_no = 2; std::getline(in, line); ++line_no) {
    if (line.empty()) continue;
    const std::string where = "curve CSV: line " + std::to_string(line_no);
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != 5) throw FormatError(where + ": expected 5 columns");
    try {
      rows.push_back({cells[0],
                      {checked_ratio(BigInt(cells[1]), BigInt(cells[2]), where),
                       checked_ratio(BigInt(cells[3]), BigInt(cells[4]), where)}});
    } catch (const std::runtime_error& e) {
      if (dynamic_cast<const FormatError*>(&e) != nullptr) throw;
      throw FormatError(where + ": " + e.what());
    }
  }
  return rows;
}

std::vector<CurveRow> curves_from_json(const json& doc) {
  if (!doc.is_array()) throw FormatError("curve JSON: expected an array");
  std::vector<CurveRow> rows;
  for (std::size_t r = 0; r < doc.size(); ++r) {
    const std::string where = "curve JSON: /" + std::to_string(r);
    const json& row = doc[r];
    const json& label = field_of(row, "curve_label", where);
    if (!label.is_string()) throw FormatError(where + "/curve_label: expected a string");
    rows.push_back({label.get<std::string>(),
                    {checked_ratio(big_of(field_of(row, "alpha_over_B_num", where), where),
                                   big_of(field_of(row, "alpha_over_B_den", where), where), where),
                     checked_ratio(big_of(field_of(row, "beta_over_B_num", where), where),
                                   big_of(field_of(row, "beta_over_B_den", where), where), where)}});
  }
  return rows;
}

}  // namespace regen
