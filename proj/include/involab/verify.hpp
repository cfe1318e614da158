#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "involab/oracle.hpp"

namespace involab {

struct VerifyRow {
  int n = 0;
  std::vector<mpz_class> expected;  // formula side
  std::vector<mpz_class> observed;  // brute force side, same layout
  bool match = false;
};

struct VerifyReport {
  std::string target;
  std::map<std::string, int> params;
  std::vector<VerifyRow> rows;
  bool gating = true;
  bool all_match() const;
  std::string verdict() const;  // "all-match" or "mismatch"
};

struct TargetInfo {
  std::string name;
  std::string description;
  bool gating = true;   // false: exploratory, or a known misprint kept for the record
  bool in_all = true;   // part of `all`
};
const std::vector<TargetInfo>& verify_targets();

struct VerifyOptions {
  int n_max = 12;
  std::optional<int> k;
  std::optional<int> d;
};

// Compares formulas against brute-force counts.  Enumerations are cached per
// instance, so one Verifier should be reused across targets.
class Verifier {
 public:
  explicit Verifier(Limits limits = {}, int workers = 0);
  // "all" runs every target marked in_all.  Throws UnknownName.
  std::vector<VerifyReport> run(std::string_view target, const VerifyOptions& opt);

  struct Object {
    Permutation p;
    int c132 = 0;  // 0 or 1
    int parity = 0;
  };
  // Involutions of length n containing 132 at most once.
  const std::vector<Object>& universe(int n);

 private:
  std::vector<VerifyReport> run_one(const TargetInfo& t, const VerifyOptions& opt);

  Limits limits_;
  int workers_;
  std::map<int, std::vector<Object>> cache_;
};

}  // namespace involab
