#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "solvspec/catalog.hpp"

namespace solvspec {

struct TableRow {
  std::string family;
  std::string q;        // computed symbolic spectrum
  std::string k;        // guard list with recomputed k values
  std::vector<std::string> mismatches;
};

// One row per family of the (heis_dim, ext_dim) case; throws UnknownCase.
std::vector<TableRow> emit_table(const std::vector<CatalogEntry>& cat, unsigned heis_dim, unsigned ext_dim);
std::string table_tsv(const std::vector<TableRow>& rows);

// Exit codes: 0 success, 1 mathematical refutation, 2 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solvspec
