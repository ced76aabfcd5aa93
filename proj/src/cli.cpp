#include "vgcone/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "vgcone/oriented_matroid.hpp"

namespace vgcone::cli {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Rational parse_entry(const json& value, const std::string& where) {
  try {
    if (value.is_number_integer()) return Rational(BigInt(std::to_string(value.get<long long>())));
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected an integer or a \"p/q\" string");
}

json one_based(IndexSet s) {
  json out = json::array();
  for (auto e : s.elements()) out.push_back(e + 1);
  return out;
}

json coefficients_json(const std::vector<std::int64_t>& c) {
  json out = json::array();
  for (auto x : c) out.push_back(x);
  return out;
}

ElementOrder resolve_order(const ArrangementDocument& doc, const RunOptions& options, std::size_t n) {
  const auto& chain = options.order ? options.order : doc.order;
  if (!chain) return ElementOrder::natural(n);
  if (chain->size() != n) throw InputError("order must list all " + std::to_string(n) + " hyperplanes");
  std::vector<std::size_t> zero_based;
  for (auto i : *chain) {
    if (i == 0 || i > n) throw InputError("order entry " + std::to_string(i) + " out of range");
    zero_based.push_back(i - 1);
  }
  try {
    return ElementOrder::from_chain(std::move(zero_based));
  } catch (const std::invalid_argument&) {
    throw InputError("order is not a permutation of the hyperplanes");
  }
}

json chain_json(const ElementOrder& order) {
  json out = json::array();
  for (auto e : order.chain()) out.push_back(e + 1);
  return out;
}

json poset_json(const IntersectionPoset& p) {
  json nodes = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json covers = json::array();
    for (auto c : p.covers()[i]) covers.push_back(c);
    nodes.push_back({{"id", i},
                     {"flat", one_based(p.node(i).flat)},
                     {"codim", p.node(i).codim},
                     {"mobius", p.mobius()[i]},
                     {"covers", covers}});
  }
  return nodes;
}

json sets_json(const std::vector<IndexSet>& sets) {
  json out = json::array();
  for (auto s : sets) out.push_back(one_based(s));
  return out;
}

std::vector<std::int64_t> size_generating_function(const std::vector<IndexSet>& sets) {
  std::vector<std::int64_t> g;
  for (auto s : sets) {
    if (g.size() <= s.size()) g.resize(s.size() + 1, 0);
    ++g[s.size()];
  }
  return g;
}

std::string series_summary(const std::optional<std::size_t>& first_negative) {
  return first_negative ? "first negative coefficient at degree " + std::to_string(*first_negative)
                        : "no negative coefficient up to the truncation order";
}

// All subsets without a broken circuit, by direct filtering.
std::vector<IndexSet> nbc_brute_force(std::size_t n, const std::vector<IndexSet>& broken) {
  std::vector<IndexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const IndexSet s(mask);
    if (std::none_of(broken.begin(), broken.end(), [&](IndexSet b) { return b.is_subset_of(s); })) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

constexpr std::size_t kOracleLimit = 16;

}  // namespace

ArrangementDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column));
  }
  if (!root.is_object()) throw InputError("document must be a JSON object");
  ArrangementDocument doc;
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw InputError("field 'name' must be a string");
    doc.name = root["name"].get<std::string>();
  }
  if (!root.contains("dimension")) throw InputError("missing field 'dimension'");
  if (!root["dimension"].is_number_unsigned()) throw InputError("field 'dimension' must be a nonnegative integer");
  doc.dimension = root["dimension"].get<std::size_t>();
  if (!root.contains("normals")) throw InputError("missing field 'normals'");
  if (!root["normals"].is_array()) throw InputError("field 'normals' must be an array");
  const auto& rows = root["normals"];
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string where = "normals row " + std::to_string(r + 1);
    if (!rows[r].is_array()) throw InputError(where + ": expected an array");
    if (rows[r].size() != doc.dimension) {
      throw InputError(where + ": has " + std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(doc.dimension));
    }
    RationalVector v;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      v.push_back(parse_entry(rows[r][c], where + ", entry " + std::to_string(c + 1)));
    }
    doc.normals.push_back(std::move(v));
  }
  if (root.contains("walls")) {
    if (!root["walls"].is_array()) throw InputError("field 'walls' must be an array");
    for (const auto& w : root["walls"]) {
      if (!w.is_number_integer()) throw InputError("field 'walls' must hold integers");
      doc.walls.push_back(w.get<long long>());
    }
  }
  if (root.contains("labels")) {
    if (!root["labels"].is_array()) throw InputError("field 'labels' must be an array");
    for (const auto& l : root["labels"]) {
      if (!l.is_string()) throw InputError("field 'labels' must hold strings");
      doc.labels.push_back(l.get<std::string>());
    }
  }
  if (root.contains("order")) {
    if (!root["order"].is_array()) throw InputError("field 'order' must be an array");
    std::vector<std::size_t> chain;
    for (const auto& e : root["order"]) {
      if (!e.is_number_unsigned()) throw InputError("field 'order' must hold positive integers");
      chain.push_back(e.get<std::size_t>());
    }
    doc.order = std::move(chain);
  }
  return doc;
}

ArrangementDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

json to_json(const ArrangementDocument& doc) {
  json normals = json::array();
  for (const auto& v : doc.normals) {
    json row = json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    normals.push_back(std::move(row));
  }
  json out = {{"name", doc.name}, {"dimension", doc.dimension}, {"normals", normals}, {"walls", doc.walls}};
  if (!doc.labels.empty()) out["labels"] = doc.labels;
  if (doc.order) out["order"] = *doc.order;
  return out;
}

std::string fingerprint(const ArrangementDocument& doc) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_json(doc).dump()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

Cone to_cone(const ArrangementDocument& doc) { return validate(doc.dimension, doc.normals, doc.walls, doc.labels); }

ArrangementDocument braid_document(std::size_t n, std::vector<long long> walls) {
  const auto a = braid_arrangement(n);
  ArrangementDocument doc;
  doc.name = "BRAID(" + std::to_string(n) + ")";
  doc.dimension = n;
  doc.normals = a.normals();
  doc.labels = a.labels();
  doc.walls = std::move(walls);
  return doc;
}

ArrangementDocument fixture(std::string_view name) {
  auto vec = [](std::initializer_list<long> xs) {
    RationalVector v;
    for (auto x : xs) v.emplace_back(x);
    return v;
  };
  if (name == "exa") {
    ArrangementDocument doc;
    doc.name = "ExA";
    doc.dimension = 2;
    doc.normals = {vec({1, -1}), vec({0, 1}), vec({1, 1})};
    doc.walls = {1};
    return doc;
  }
  if (name == "exb") {
    ArrangementDocument doc;
    doc.name = "ExB";
    doc.dimension = 3;
    doc.normals = {vec({2, 0, -1}), vec({1, 1, -2}), vec({1, -1, -2}), vec({1, -1, 0}), vec({1, 1, 0})};
    doc.walls = {4, 5};
    return doc;
  }
  if (name == "a5cone") {
    auto doc = braid_document(6);
    doc.name = "A5CONE";
    for (auto [i, j] : {std::pair{0, 1}, std::pair{2, 3}, std::pair{4, 5}}) {
      doc.walls.push_back(static_cast<long long>(braid_index(6, i, j)) + 1);
    }
    return doc;
  }
  if (name.starts_with("braid") && name.size() == 6 && name[5] >= '2' && name[5] <= '6') {
    return braid_document(static_cast<std::size_t>(name[5] - '0'));
  }
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() { return {"exa", "exb", "a5cone", "braid2", "braid3", "braid4", "braid5", "braid6"}; }

ChamberFunction parse_chamber_function(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError("chamber function: syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(column));
  }
  if (!root.is_object()) throw InputError("chamber function must be a JSON object");
  ChamberFunction f;
  for (const auto& [key, value] : root.items()) {
    if (key.find_first_not_of("+-") != std::string::npos) throw InputError("chamber key '" + key + "' is not a sign vector");
    if (value.is_number_integer()) {
      f.emplace(key, BigInt(std::to_string(value.get<long long>())));
    } else if (value.is_string()) {
      try {
        f.emplace(key, BigInt(value.get<std::string>(), 10));
      } catch (const std::invalid_argument&) {
        throw InputError("chamber '" + key + "': value is not an integer");
      }
    } else {
      throw InputError("chamber '" + key + "': value is not an integer");
    }
  }
  return f;
}

std::vector<std::string> commands() {
  return {"chambers", "poset",    "interior-poset", "mobius", "poincare", "circuits", "nbc",
          "knbc",     "relations", "standard-monomials", "hilbert", "verify", "koszul", "expand"};
}

RunResult run(std::string_view command, const ArrangementDocument& doc, const RunOptions& options) {
  const auto all = commands();
  if (std::find(all.begin(), all.end(), command) == all.end()) {
    throw InputError("unknown command '" + std::string(command) + "'");
  }
  const Cone cone = to_cone(doc);
  const Arrangement& a = cone.arrangement();
  const std::size_t n = a.size();
  const ElementOrder order = resolve_order(doc, options, n);
  const MonomialOrder monomial_order(order);

  RunResult result;
  json& report = result.report;
  report["command"] = std::string(command);
  report["input"] = {{"name", doc.name},
                     {"fingerprint", fingerprint(doc)},
                     {"dimension", doc.dimension},
                     {"hyperplanes", n},
                     {"walls", one_based(cone.walls())}};
  report["options"] = {{"order", chain_json(order)}, {"field", options.field}, {"oracle", options.oracle}};
  json results = json::object();
  json checks = json::object();

  if (command == "chambers") {
    const auto ch = cone_chambers(cone, options.threads);
    results["count"] = ch.size();
    results["chambers"] = ch;
    if (options.oracle && n <= kOracleLimit) checks["oracle_exhaustive_chambers"] = chambers_exhaustive(a, cone.walls()) == ch;
  } else if (command == "poset") {
    const auto p = intersection_poset(a);
    results["nodes"] = poset_json(p);
  } else if (command == "interior-poset") {
    const auto p = interior_poset(cone);
    results["nodes"] = poset_json(p);
  } else if (command == "mobius") {
    const auto full = intersection_poset(a);
    const auto inner = interior_poset(cone, full);
    auto values = [](const IntersectionPoset& p) {
      json out = json::array();
      for (std::size_t i = 0; i < p.size(); ++i) out.push_back({{"flat", one_based(p.node(i).flat)}, {"mobius", p.mobius()[i]}});
      return out;
    };
    results["full"] = values(full);
    results["interior"] = values(inner);
    bool lower_intervals_agree = true;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      lower_intervals_agree = lower_intervals_agree && inner.mobius()[i] == full.mobius()[full.find(inner.node(i).flat)];
    }
    checks["interior_mobius_matches_full"] = lower_intervals_agree;
  } else if (command == "poincare") {
    const auto full = intersection_poset(a);
    const auto inner = interior_poset(cone, full);
    const auto p = poincare(inner);
    results["coefficients"] = coefficients_json(p.coefficients);
    results["at_one"] = p.at_one();
    results["arrangement_coefficients"] = coefficients_json(poincare(full).coefficients);
    if (options.oracle) {
      checks["oracle_zaslavsky"] = static_cast<std::int64_t>(cone_chambers(cone, options.threads).size()) == p.at_one();
      checks["oracle_knbc_generating_function"] = size_generating_function(k_nbc_sets(cone, order)) == p.coefficients;
    }
  } else if (command == "circuits") {
    json list = json::array();
    for (const auto& c : circuits(a)) {
      json lambda = json::array();
      for (const auto& x : circuit_coefficients(a, c)) lambda.push_back(to_string(x));
      list.push_back({{"plus", one_based(c.plus())},
                      {"minus", one_based(c.minus())},
                      {"support", one_based(c.support())},
                      {"coefficients", lambda}});
    }
    results["circuits"] = list;
  } else if (command == "nbc") {
    const auto all_circuits = circuits(a);
    const auto broken = broken_circuits(all_circuits, order);
    const auto sets = nbc_sets(n, broken);
    results["broken_circuits"] = sets_json(broken);
    results["sets"] = sets_json(sets);
    results["generating_function"] = coefficients_json(size_generating_function(sets));
    if (options.oracle && n <= kOracleLimit) checks["oracle_brute_force_nbc"] = nbc_brute_force(n, broken) == sets;
  } else if (command == "knbc") {
    const auto sets = k_nbc_sets(cone, order);
    results["sets"] = sets_json(sets);
    results["generating_function"] = coefficients_json(size_generating_function(sets));
    if (options.oracle) {
      checks["oracle_equinumerous_with_chambers"] = sets.size() == cone_chambers(cone, options.threads).size();
    }
  } else if (command == "relations") {
    json list = json::array();
    for (const auto& r : generate_relations(cone, monomial_order)) {
      json row = {{"kind", to_string(r.kind)},
                  {"g", to_string(r.polynomial, monomial_order)},
                  {"in_deg", to_string(r.degree_initial, monomial_order)},
                  {"in_lead", to_string(r.leading)}};
      row["circuit"] = r.source ? json(to_string(*r.source)) : json(nullptr);
      list.push_back(std::move(row));
    }
    results["relations"] = list;
    results["coefficients"] = options.field ? "Q" : "Z";
  } else if (command == "standard-monomials") {
    const auto standard = standard_monomials(generate_relations(cone, monomial_order), n);
    json list = json::array();
    for (const auto& m : standard) list.push_back(to_string(m));
    results["monomials"] = list;
    if (options.oracle) {
      std::vector<IndexSet> supports;
      for (const auto& m : standard) supports.push_back(m.support());
      checks["oracle_standard_equals_knbc"] = supports == k_nbc_sets(cone, order);
    }
  } else if (command == "hilbert") {
    const auto h = hilbert_series(cone, monomial_order);
    results["coefficients"] = coefficients_json(h.coefficients);
    if (options.oracle) checks["oracle_hilbert_equals_poincare"] = h.coefficients == poincare(cone).coefficients;
  } else if (command == "verify") {
    const auto r = verify_main_theorem(cone, monomial_order, options.threads);
    for (const auto& c : r.checks) {
      checks[c.name] = c.passed;
      if (!c.failures.empty()) results["failures"][c.name] = c.failures;
    }
    results["chamber_count"] = r.chamber_count;
    results["basis_size"] = r.basis_size;
    results["hilbert"] = coefficients_json(r.hilbert.coefficients);
    results["poincare"] = coefficients_json(r.poincare.coefficients);
    json ranks = json::array();
    for (auto x : r.filtration_ranks) ranks.push_back(x);
    results["filtration_ranks"] = ranks;
    results["determinant"] = to_string(r.determinant);
    results["coefficients"] = options.field ? "Q" : "Z";
    if (!options.field) results["determinant_unimodular"] = abs(r.determinant) == 1;
    if (options.oracle && n <= kOracleLimit) {
      checks["oracle_exhaustive_chambers"] = chambers_exhaustive(a, cone.walls()) == cone_chambers(cone, options.threads);
    }
  } else if (command == "koszul") {
    const auto h = hilbert_series(cone, monomial_order);
    const auto series = invert_hilb_neg(h, options.truncate);
    const auto first_negative = koszul_obstruction(h, options.truncate);
    json coeffs = json::array();
    for (const auto& c : series.coefficients) coeffs.push_back(c.get_str());
    results["hilbert"] = coefficients_json(h.coefficients);
    results["inverse_series"] = coeffs;
    results["truncate"] = options.truncate;
    results["first_negative"] = first_negative ? json(*first_negative) : json(nullptr);
    const auto all_circuits = circuits(a);
    results["quadratic_certificate"] = quadratic_certificate(all_circuits, order);
    std::optional<ElementOrder> found;
    if (options.search_order) {
      found = supersolvable_order_search(a);
      results["search_order"] = found ? chain_json(*found) : json(nullptr);
    }
    // The broken-circuit certificate speaks about the full arrangement only.
    const bool certified = cone.walls().empty() && (quadratic_certificate(all_circuits, order) || found.has_value());
    KoszulVerdict verdict = KoszulVerdict::Inconclusive;
    if (first_negative) {
      verdict = KoszulVerdict::CertifiedNonKoszul;
    } else if (certified) {
      verdict = KoszulVerdict::CertifiedKoszul;
    }
    results["verdict"] = to_string(verdict);
    results["summary"] = to_string(verdict) + ", " + series_summary(first_negative);
  } else if (command == "expand") {
    if (!options.function) throw InputError("expand needs a chamber-function file (--function)");
    const VgRing ring(cone, options.threads);
    for (const auto& [key, value] : *options.function) {
      if (!std::binary_search(ring.chambers().begin(), ring.chambers().end(), key)) {
        throw InputError("chamber function names '" + key + "', which is not a chamber of the cone");
      }
    }
    const auto expansion = ring.chamber_expansion(*options.function);
    const auto normal_form = divide(expansion, generate_relations(cone, monomial_order), monomial_order).remainder;
    results["expansion"] = to_string(expansion, monomial_order);
    results["normal_form"] = to_string(normal_form, monomial_order);
    checks["roundtrip"] = ring.evaluate(normal_form) == *options.function;
  }

  report["results"] = results;
  report["checks"] = checks;
  bool ok = true;
  for (const auto& [name, passed] : checks.items()) ok = ok && passed.get<bool>();
  report["status"] = ok ? "ok" : "failed";
  result.exit_code = ok ? 0 : 1;
  return result;
}

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

std::string render_text(const json& report) {
  std::ostringstream out;
  const auto& input = report["input"];
  out << report["command"].get<std::string>() << "  " << input["name"].get<std::string>() << "  ("
      << input["fingerprint"].get<std::string>() << ")\n";
  const auto& results = report["results"];
  if (results.contains("relations")) {
    std::size_t w_kind = 4;
    std::size_t w_g = 1;
    std::size_t w_deg = 6;
    for (const auto& r : results["relations"]) {
      w_kind = std::max(w_kind, r["kind"].get<std::string>().size());
      w_g = std::max(w_g, r["g"].get<std::string>().size());
      w_deg = std::max(w_deg, r["in_deg"].get<std::string>().size());
    }
    out << std::left << std::setw(static_cast<int>(w_kind)) << "kind" << " | " << std::setw(static_cast<int>(w_g)) << "g"
        << " | " << std::setw(static_cast<int>(w_deg)) << "in_deg" << " | in_lead\n";
    for (const auto& r : results["relations"]) {
      out << std::left << std::setw(static_cast<int>(w_kind)) << r["kind"].get<std::string>() << " | "
          << std::setw(static_cast<int>(w_g)) << r["g"].get<std::string>() << " | " << std::setw(static_cast<int>(w_deg))
          << r["in_deg"].get<std::string>() << " | " << r["in_lead"].get<std::string>() << "\n";
    }
  } else {
    for (const auto& [key, value] : results.items()) {
      if (value.is_array() && !value.empty() && value.front().is_object()) {
        out << key << ":\n";
        for (const auto& row : value) out << "  " << row.dump() << "\n";
      } else {
        out << key << ": " << value.dump() << "\n";
      }
    }
  }
  for (const auto& [name, passed] : report["checks"].items()) {
    out << (passed.get<bool>() ? "PASS " : "FAIL ") << name << "\n";
  }
  out << "status: " << report["status"].get<std::string>() << "\n";
  return out.str();
}

}  // namespace vgcone::cli
