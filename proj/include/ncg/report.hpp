#pragma once

// Report envelopes behind the CLI:
//   {"command", "inputs", "data", "results": [{"name", "status", "residual"?}], "version"}
// Keys keep insertion order and every scalar is printed canonically, so the
// same inputs give byte-identical output.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncg/json_io.hpp"

namespace ncg {

inline constexpr const char* kVersion = "0.1.0";

struct CheckResult {
  std::string name;
  std::string status;  // pass, fail or error
  std::optional<std::string> residual;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Json& inputs() { return inputs_; }
  Json& data() { return data_; }
  const std::vector<CheckResult>& results() const { return results_; }

  void check(std::string name, bool pass, std::optional<std::string> residual = std::nullopt);
  // A named check taken from residual lists: passes iff the list is empty, and
  // reports the first residual otherwise.
  void check_residuals(std::string name, const std::vector<Residual>& residuals);
  void error(std::string name, const std::string& message);

  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }
  Json to_json() const;

 private:
  std::string command_;
  Json inputs_ = Json::object();
  Json data_ = Json::object();
  std::vector<CheckResult> results_;
};

std::string dump(const Json& j, bool pretty);

// All throw UsageError for out-of-range parameters.
Report cmd_kn_info(int n, std::uint64_t seed);
Report cmd_calculus(int n, const std::string& g, std::uint64_t seed);
// n and g, when given, must agree with the file.
Report cmd_lc_solve(const FormFile& form, const std::string& path, std::optional<int> n,
                    std::optional<std::string> g, bool star);
Report cmd_torus_verify(std::uint64_t seed);
Report cmd_torus_cohomology(int window);

}  // namespace ncg
