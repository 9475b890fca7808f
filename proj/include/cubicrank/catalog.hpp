#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicrank/form.hpp"
#include "cubicrank/io.hpp"

namespace cubicrank {

// One claimed value (or interval) for a rank notion of the entry's form.
// Each side is tagged "certified" when an attached certificate establishes
// it locally, or "literature-cited" when it is quoted from the classical
// literature; cited sides are backed by an ALS evidence run at verify time
// (residual < 1e-6 at the claimed rank over the claimed field).  An absent
// upper bound carries the tag "unknown".
struct CatalogClaim {
  std::string kind;   // rank | symmetric-rank | border-rank | symmetric-border-rank
  std::string field;  // "C" | "R"
  int lower = 0;
  std::optional<int> upper;
  std::string lower_tag;  // certified | literature-cited
  std::string upper_tag;  // certified | literature-cited | unknown
  std::vector<std::string> evidence;  // certificate ids supporting the claim
  std::string note;
  // overrides for the ALS evidence run (border-rank evidence needs long runs)
  int evidence_restarts = 8;
  int evidence_iters = 600;
};

// A normal form with its claimed rank profile and the machine-checkable
// certificates behind every "certified" tag.  Certificates are stored as
// JSON verbatim so entry files round-trip bit-exactly; each carries an
// "id" and a "type" dispatched by catalog_verify:
//   decomposition      exact Waring decomposition, checked term by term
//   piece-sum          the form is a signed sum of other entries' forms
//   flattening         frozen flattening rank (lower bound for every rank)
//   substitution       frozen schedule + final determinant, re-run exactly
//   border-ladder      frozen ladder level, re-run with the stored seed
//   hyperdet           frozen 2x2x2 hyperdeterminant of a binary restriction
//   binary-rank        binary cubic classified by cube test + hyperdet
//   sos                sum-of-squares identity, verified exactly
//   real-substitution  scaled tensor + real reduction schedule + sampled
//                      closed-form slices (real lower bound machinery)
//   genericity         frozen Hessian genericity profile
//   non-singular       the surface has an empty singular locus
//   comon              rank/symmetric-rank coincidence via a verified
//                      decomposition within flattening + 2
struct CatalogEntry {
  std::string id;
  std::string title;     // printable normal form
  CubicForm form;
  std::vector<CatalogClaim> claims;
  std::vector<Json> certificates;
  std::vector<std::string> notes;
  std::vector<std::string> open;  // follow-ups (missing exact certificates)
};

Json entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const Json& j);

// $CUBICRANK_CATALOG_DIR when set, else <source>/catalog
std::string catalog_dir();
// sorted ids of the *.json entries under dir
std::vector<std::string> catalog_ids(const std::string& dir = catalog_dir());
CatalogEntry load_entry(const std::string& id,
                        const std::string& dir = catalog_dir());

// the built-in entries (the generator writes these to catalog/*.json)
std::vector<CatalogEntry> builtin_catalog_entries();

struct CatalogCheck {
  std::string entry;
  std::string check;   // certificate id, "claim:<kind>/<field>", or "als:..."
  bool ok = false;
  std::string detail;  // measured value / mismatch description
};

struct CatalogReport {
  std::string scope;  // entry id or "all"
  std::uint64_t seed = 0;
  std::vector<CatalogCheck> checks;  // ordered by entry id, then check order
  int entries = 0;
  int failures = 0;
  bool ok() const { return failures == 0; }
};

Json catalog_report_to_json(const CatalogReport& r);

// Re-runs every certificate of the entry (or of every entry, in id order)
// through bounds/decompose/invariants, checks claim tags against the
// certificate results, and backs each literature-cited side with an ALS
// evidence run.  Entries verify independently (OpenMP when parallel); the
// report order is fixed by id.  Unknown ids raise SchemaError.
CatalogReport catalog_verify(const std::string& id_or_all,
                             std::uint64_t seed = 1, bool parallel = true,
                             const std::string& dir = catalog_dir());

}  // namespace cubicrank
