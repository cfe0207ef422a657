#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "altquot/completion.hpp"
#include "altquot/permgroup.hpp"
#include "altquot/stallings.hpp"
#include "altquot/words.hpp"

namespace altquot {

enum class Mode { hall, alternating, symmetric };
const char* mode_name(Mode m);

struct ProblemInstance {
  std::size_t rank = 2;
  std::vector<Word> h_generators;
  std::vector<Word> gammas;
  Mode mode = Mode::alternating;
};

// Image of one input word under the quotient map. For subgroup generators
// `passed` means the image fixes the base point; for the separated elements
// it means the base point is moved.
struct WordCheck {
  Word word;
  Permutation image;
  Point base_image = 0;
  bool passed = false;

  friend bool operator==(const WordCheck&, const WordCheck&) = default;
};

struct SeparationCertificate {
  Mode mode = Mode::hall;
  std::size_t rank = 0;
  std::size_t degree = 0;
  Point base = 0;
  std::vector<Permutation> generator_images;
  std::vector<WordCheck> h_checks;
  std::vector<WordCheck> gamma_checks;
  std::optional<GroupDescription> group;    // absent in Hall mode
  std::optional<SignVector> sign_vector;    // absent in Hall mode
};

bool operator==(const SeparationCertificate& a, const SeparationCertificate& b);

// Intermediate graphs of the construction, all sharing the base vertex 0.
struct Construction {
  StallingsGraph core;
  StallingsGraph z;  // core grown along every gamma
  StallingsGraph cover;
  std::optional<GadgetCompletion> gadget;
};

// Validates the instance and returns the core grown along each gamma.
// Throws Error{empty_gamma_list} or Error{gamma_in_subgroup} (gammas are
// checked in input order).
StallingsGraph build_z(const ProblemInstance& inst);

// Full construction. Errors, in order of precedence: empty_gamma_list,
// rank_too_small (non-Hall modes), gamma_in_subgroup, finite_index_subgroup
// (non-Hall modes), verification_exhausted.
Construction construct(const ProblemInstance& inst);

SeparationCertificate separate(const ProblemInstance& inst);

struct CheckEntry {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckEntry> checks;
  bool passed() const;
};

// Re-derives everything the certificate claims from its generator images
// alone. Failures are report entries, never exceptions.
VerificationReport verify_certificate(const ProblemInstance& inst,
                                      const SeparationCertificate& cert);

}  // namespace altquot
