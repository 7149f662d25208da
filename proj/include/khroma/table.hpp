// table.hpp
// ---------
// Dimension tables for homology computations, keyed by (cohomological
// degree, t-exponent a, q-exponent d). Absent entries are zero.

#pragma once

#include "khroma/series.hpp"

#include <map>
#include <string>
#include <tuple>

namespace khroma {

struct HomologyTable {
  std::string construction;  // "cube", "koszul" or "dichromatic"
  int D = 0;
  std::map<std::tuple<int, int, int>, long> entries;

  long dim(int i, int a, int d) const {
    auto it = entries.find({i, a, d});
    return it == entries.end() ? 0 : it->second;
  }
  void set(int i, int a, int d, long v) {
    if (v != 0) entries[{i, a, d}] = v;
  }
  bool same_entries(const HomologyTable& o) const { return entries == o.entries; }
  bool operator==(const HomologyTable& o) const = default;

  // first_key is "i" for the singly graded tables, "j" for the triply
  // graded one (which also omits the construction tag).
  std::string json(const std::string& first_key = "i") const;
  std::string str(const std::string& first_key = "i") const;
};

// One verified identity row of an Euler-characteristic report.
struct EulerRow {
  int a = 0, d = 0;
  Int chain_sum, homology_sum, expected;
  bool pass = false;
};

struct EulerReport {
  std::vector<EulerRow> rows;
  bool pass = true;
  std::string str() const;
};

}  // namespace khroma
