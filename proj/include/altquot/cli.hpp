#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace altquot::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
  kGammaInSubgroup = 3,
  kFiniteIndex = 4,
  kRankTooSmall = 5,
  kVerificationExhausted = 6,
};

// Reads an instance document and writes its certificate. With `batch`, the
// input is an array of instances processed concurrently on up to `jobs`
// threads (0 = hardware concurrency); the output array keeps input order and
// holds {"error": ...} objects for failed instances. The exit code is that of
// the first failing instance.
int cmd_separate(std::istream& in, std::ostream& out, std::ostream& err,
                 bool batch = false, unsigned jobs = 0);

int cmd_member(std::size_t rank, const std::vector<std::string>& subgroup,
               const std::string& word, std::ostream& out, std::ostream& err);

enum class DotStage { core, z, cover };
int cmd_export_dot(DotStage stage, std::istream& in, std::ostream& out,
                   std::ostream& err);

int cmd_verify(std::istream& instance, std::istream& certificate,
               std::ostream& out, std::ostream& err, bool json = false);

}  // namespace altquot::cli
