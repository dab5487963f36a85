#pragma once

// The regression suite over the reference configurations: one result per
// acceptance criterion, shared by the acceptance test and `multisep
// verify-paper`.

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "multisep/points.hpp"

namespace multisep {

struct ReferenceSets {
  PointSet nineteen;
  PointSet partition_6531;
  PointSet twenty_eight;
  PointSet eleven;
};

ReferenceSets builtin_reference_sets();

/// Reads nineteen.pts, partition_6531.pts, twenty_eight.pts, eleven.pts.
/// Throws Error (ParseError for unreadable files).
ReferenceSets load_reference_sets(const std::filesystem::path& dir);

/// Directory of the reference files shipped with the sources.
std::filesystem::path default_fixture_dir();

struct CriterionResult {
  unsigned id = 0;
  std::string title;
  bool pass = true;
  std::vector<std::string> failures;
  std::size_t cases = 0;
  double seconds = 0;
};

/// Seeded random P^1 x P^1 sets with s <= 12: grid subsets, Ferrers sets and
/// generic sets.
std::vector<PointSet> property_cases_p1p1();
/// Seeded random sets in P^1 x P^1 x P^1 with s <= 6.
std::vector<PointSet> property_cases_p1p1p1();

/// Runs the criteria in order (all of them when `only` is empty);
/// `progress` sees each result as it lands.
std::vector<CriterionResult> run_acceptance(const ReferenceSets& sets,
                                            const std::function<void(const CriterionResult&)>& progress = {},
                                            const std::vector<unsigned>& only = {});

constexpr unsigned criterion_count = 9;

/// Criterion 0: each loaded set equals its built-in counterpart; failures
/// list the points missing from or extra in the file.
CriterionResult check_reference_files(const ReferenceSets& loaded);

/// "PASS  3  title  (n cases, 1.23 s)" plus indented failure lines.
std::string format_result(const CriterionResult& r);

}  // namespace multisep
