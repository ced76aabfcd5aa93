#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vgcone/arrangement.hpp"
#include "vgcone/koszul.hpp"
#include "vgcone/vg_ring.hpp"

namespace vgcone::cli {

/// Input problem: malformed document, bad flag value, unknown command.
/// Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed arrangement file.
///
///   {
///     "name": "ExA",
///     "dimension": 2,
///     "normals": [["1", "-1"], [0, 1], ["1", "1"]],
///     "walls": [1],
///     "order": [1, 2, 3]
///   }
///
/// Entries are integers or "p/q" strings. Walls are 1-based; -i selects the
/// negative side of H_i. `order` lists hyperplanes from smallest to largest.
struct ArrangementDocument {
  std::string name;
  std::size_t dimension = 0;
  std::vector<RationalVector> normals;
  std::vector<long long> walls;
  std::vector<std::string> labels;
  std::optional<std::vector<std::size_t>> order;  // 1-based chain
};

/// Throws InputError with line/column for syntax errors, or naming the
/// offending field or row.
ArrangementDocument parse_document(std::string_view text);
ArrangementDocument load_document(const std::string& path);

/// Canonical JSON form (rationals as strings).
nlohmann::json to_json(const ArrangementDocument& doc);
/// FNV-1a 64 of the canonical JSON, as "fnv1a64:<16 hex digits>".
std::string fingerprint(const ArrangementDocument& doc);

/// Validated cone for the document (walls re-oriented).
Cone to_cone(const ArrangementDocument& doc);

/// Bundled inputs: "exa", "exb", "a5cone", "braid3".."braid6".
ArrangementDocument fixture(std::string_view name);
std::vector<std::string> fixture_names();
/// Braid arrangement A_{n-1} with optional 1-based walls.
ArrangementDocument braid_document(std::size_t n, std::vector<long long> walls = {});

/// JSON object mapping sign-vector strings to integers.
ChamberFunction parse_chamber_function(std::string_view text);

struct RunOptions {
  std::optional<std::vector<std::size_t>> order;  // 1-based chain; overrides the document
  std::size_t truncate = kDefaultTruncation;
  bool search_order = false;
  bool field = false;
  bool oracle = false;
  unsigned threads = 1;
  std::optional<ChamberFunction> function;  // for `expand`
};

struct RunResult {
  nlohmann::json report;
  int exit_code = 0;  // 0 ok, 1 a check failed
};

std::vector<std::string> commands();

/// Executes one command. Library errors propagate as exceptions.
RunResult run(std::string_view command, const ArrangementDocument& doc, const RunOptions& options);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string render_json(const nlohmann::json& report);
/// Human-readable tables.
std::string render_text(const nlohmann::json& report);

}  // namespace vgcone::cli
