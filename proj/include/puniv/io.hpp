#ifndef PUNIV_IO_HPP
#define PUNIV_IO_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "puniv/module_functors.hpp"
#include "puniv/poisson.hpp"
#include "puniv/universal.hpp"

namespace puniv {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Documents.  Algebras, Poisson modules and A-modules travel as JSON with
// 1-based indices and exact coefficients (integers, or strings "a/b"); see
// data/ for examples.  Serialization is canonical, so byte-identical output
// is a consequence of value equality.
// ---------------------------------------------------------------------------

/// "Q" or {"Fp": p}.
Field parse_field_json(const json& j);
json field_to_json(const Field& f);
/// Command-line spelling: "Q", "F2", "F5", ...
Field parse_field_flag(const std::string& text);

/// Integer or exact "a/b" string; floating-point input is rejected.
Scalar parse_coeff(const Field& f, const json& j);

/// {"field", "dim", "unit"?, "basis"?, "name"?, "product": [[i,j,s,c]...],
///  "bracket": [[i,j,s,c]...]} with i <= j resp. i < j.  With `verified`
/// set, a structure failing the Poisson axioms is rejected as an input
/// error carrying the axiom report.
PoissonStructure parse_algebra(const json& doc, bool verified = true);
json algebra_to_json(const PoissonStructure& p);

/// {"dim", "assoc": [[i,j,s,c]...], "lie": [[i,j,s,c]...]}, i over the base
/// algebra, j/s over the module.
PoissonModuleStructure parse_module(const json& doc, const PoissonStructure& base);
json module_to_json(const PoissonModuleStructure& m);

/// {"dim", "actions": [{"row": s, "col": i, "matrix": [[c..]..]}...]};
/// generators without an entry act as zero.
AModuleStructure parse_amodule(const json& doc,
                               std::shared_ptr<const UniversalPresentation> algebra);
json amodule_to_json(const AModuleStructure& v);

/// FNV-1a over the canonical rendering; used as the input digest in reports.
std::uint64_t fnv1a64(const std::string& data);
std::string digest(const json& canonical_doc);

// ---------------------------------------------------------------------------
// Command surface.  run_command implements the CLI: it parses flags, loads
// documents, dispatches, and renders the deterministic report document.
// ---------------------------------------------------------------------------

struct CommandResult {
  int exit_code = 0;   ///< 0 ok, 1 verification failure, 2 input error, 3 guard
  json report;         ///< null for --help
  std::string text;    ///< exactly what the CLI prints to stdout
};

/// The content-based halves of the subcommands: documents in, report
/// document out.  Failure reports set status "verification-failed"; input
/// and guard problems throw.
json report_verify(const json& algebra_doc);
json report_universal(const json& p_doc, const json& q_doc, bool unital = false,
                      TermOrder order = TermOrder::degrevlex);
json report_bialgebra(const json& algebra_doc);
json report_endomorphisms(const json& algebra_doc, const std::string& field_flag,
                          std::uint64_t guard = kDefaultEnumGuard);
json report_automorphisms(const json& algebra_doc, const std::string& field_flag,
                          std::uint64_t guard = kDefaultEnumGuard);
json report_gradings(const json& algebra_doc, const std::string& group,
                     const std::string& field_flag, bool classify = false,
                     std::uint64_t guard = kDefaultEnumGuard);
json report_tensor_module(const json& p_doc, const json& q_doc, const json& u_doc,
                          const json& v_doc);
json report_presentation(const std::string& flavour, const json& p_doc, const json& q_doc,
                         const json& m_doc, const json& w_doc);

/// Canonical rendering of a report (2-space indent, sorted keys, trailing
/// newline).
std::string render_report(const json& report);

/// Everything after argv[0].  Never throws; all failure modes are encoded in
/// the exit code and report.  The enumeration guard honours the environment
/// variable PUNIV_ENUM_GUARD (capped at 2^28).
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace puniv

#endif
