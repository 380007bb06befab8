#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kodim/catalog.hpp"

namespace kodim {

// Outcome of parsing/merging catalog text. On failure `catalog` is empty
// and `diagnostics` explains why; warnings may accompany a success.
struct CatalogParseResult {
    std::optional<Catalog> catalog;
    std::vector<Diagnostic> diagnostics;

    bool ok() const noexcept { return catalog.has_value(); }
};

// Parses the block-per-record text format:
//
//   # comment lines start with '#'
//   name: H3xR
//   dim: 4
//   class: fibered
//   fib: H3 | R          # everything after '#' on a fib line is its note
//   fib: H2 | R2         # second decomposition, in declaration order
//   alias: RxH3
//   compact_rep: true
//   note: free text for humans
//
//   name: ...            # blank line separates records
//
// Outside `fib:` lines a '#' starts a comment. Unknown keys, missing
// required fields, bad tags and all structural validation problems are
// reported with line numbers where possible.
CatalogParseResult parse_catalog(std::string_view text);

// Parses `text` and appends its records to a copy of `base`, re-validating
// the union (so extensions may reference base geometries).
CatalogParseResult extend_catalog(const Catalog& base, std::string_view text);

// Inverse of parse_catalog up to comments and blank-line layout:
// parse(serialize(c)) reproduces exactly the records of c.
std::string serialize_catalog(const Catalog& catalog);

// The built-in geometry table (dimensions 0 through 5).
Catalog load_builtin();

// Raw text of the built-in table, as accepted by parse_catalog.
std::string_view builtin_catalog_text();

}  // namespace kodim
