#pragma once

#include "lbp/rational.hpp"
#include "lbp/report.hpp"

#include <filesystem>
#include <functional>
#include <istream>
#include <string>
#include <vector>

namespace lbp {

struct OeisFixture {
  std::string id;
  long offset = 0;
  std::vector<BigInt> terms;
};

// Lines "<index> <integer>"; indices must be consecutive. Blank lines and
// lines starting with '#' are skipped.
OeisFixture parse_fixture(const std::string& id, std::istream& in);
// Reads <dir>/<id>.txt.
OeisFixture load_fixture(const std::filesystem::path& dir, const std::string& id);

struct OeisGenerator {
  std::string name;
  std::string sequence_id;  // the fixture this generator is checked against by default
  std::string description;
  long offset = 0;
  std::function<std::vector<BigInt>(std::size_t count)> terms;
};

const std::vector<OeisGenerator>& oeis_generators();

// Compares a generator's prefix with the fixture over their overlap. The
// generator defaults to the one registered for the id. Missing fixtures,
// unknown generators and offset mismatches throw UsageError.
ScenarioReport oeis_check(const std::filesystem::path& fixtures_dir, const std::string& id, const std::string& generator = {});

}  // namespace lbp
