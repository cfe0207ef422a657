#include "altquot/separation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "altquot/errors.hpp"

namespace altquot {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::hall: return "hall";
    case Mode::alternating: return "alternating";
    case Mode::symmetric: return "symmetric";
  }
  return "hall";
}

bool operator==(const SeparationCertificate& a, const SeparationCertificate& b) {
  auto same_group = [](const std::optional<GroupDescription>& x,
                       const std::optional<GroupDescription>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->degree == y->degree && x->generators == y->generators &&
           x->order == y->order && x->classification == y->classification;
  };
  return a.mode == b.mode && a.rank == b.rank && a.degree == b.degree &&
         a.base == b.base && a.generator_images == b.generator_images &&
         a.h_checks == b.h_checks && a.gamma_checks == b.gamma_checks &&
         same_group(a.group, b.group) && a.sign_vector == b.sign_vector;
}

namespace {

void check_words(const ProblemInstance& inst) {
  if (inst.rank == 0) throw std::invalid_argument("rank must be positive");
  for (const auto* list : {&inst.h_generators, &inst.gammas})
    for (const Word& w : *list)
      if (w.max_label() > inst.rank)
        throw Error(Errc::generator_out_of_range,
                    "word uses a generator beyond rank " +
                        std::to_string(inst.rank));
}

}  // namespace

StallingsGraph build_z(const ProblemInstance& inst) {
  check_words(inst);
  if (inst.gammas.empty())
    throw Error(Errc::empty_gamma_list, "no elements to separate");
  StallingsGraph core = core_graph(inst.rank, inst.h_generators);
  for (std::size_t i = 0; i < inst.gammas.size(); ++i) {
    if (is_member(core, inst.gammas[i]))
      throw Error(Errc::gamma_in_subgroup,
                  "element " + std::to_string(i) + " (\"" +
                      (inst.rank <= 26 ? render(inst.gammas[i]) : "?") +
                      "\") lies in the subgroup",
                  i);
  }
  for (const Word& g : inst.gammas) grow_along(core, g);
  return core;
}

Construction construct(const ProblemInstance& inst) {
  check_words(inst);
  if (inst.gammas.empty())
    throw Error(Errc::empty_gamma_list, "no elements to separate");
  if (inst.mode != Mode::hall && inst.rank < 2)
    throw Error(Errc::rank_too_small,
                "alternating and symmetric quotients need a free group of rank "
                "greater than one");

  Construction c{core_graph(inst.rank, inst.h_generators),
                 StallingsGraph(inst.rank), StallingsGraph(inst.rank), {}};
  c.z = build_z(inst);

  switch (inst.mode) {
    case Mode::hall:
      c.cover = hall_complete(c.z);
      break;
    case Mode::alternating:
    case Mode::symmetric:
      if (is_covering(c.z))
        throw Error(Errc::finite_index_subgroup,
                    "the subgroup has finite index; the hypothesis that H is "
                    "of infinite index in F is necessary");
      c.gadget = inst.mode == Mode::alternating ? alternating_complete(c.z)
                                                : symmetric_complete(c.z);
      c.cover = c.gadget->cover;
      break;
  }
  return c;
}

namespace {

WordCheck check_word(std::span<const Permutation> images, Point base,
                     const Word& w, bool should_fix) {
  WordCheck c;
  c.word = w;
  c.image = evaluate_word(images, w);
  c.base_image = c.image[base];
  c.passed = should_fix ? c.base_image == base : c.base_image != base;
  return c;
}

}  // namespace

SeparationCertificate separate(const ProblemInstance& inst) {
  Construction c = construct(inst);

  SeparationCertificate cert;
  cert.mode = inst.mode;
  cert.rank = inst.rank;
  cert.degree = c.cover.vertex_count();
  cert.base = c.cover.base();
  cert.generator_images = graph_to_perms(c.cover);
  for (const Word& h : inst.h_generators)
    cert.h_checks.push_back(check_word(cert.generator_images, cert.base, h, true));
  for (const Word& g : inst.gammas)
    cert.gamma_checks.push_back(
        check_word(cert.generator_images, cert.base, g, false));
  if (c.gadget) {
    cert.group = std::move(c.gadget->group);
    cert.sign_vector = std::move(c.gadget->signs);
  }

  const auto ok = [](const WordCheck& w) { return w.passed; };
  if (!std::all_of(cert.h_checks.begin(), cert.h_checks.end(), ok) ||
      !std::all_of(cert.gamma_checks.begin(), cert.gamma_checks.end(), ok))
    throw std::logic_error("constructed quotient fails to separate");
  return cert;
}

bool VerificationReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const CheckEntry& c) { return c.passed; });
}

namespace {

std::string word_text(const Word& w, std::size_t rank) {
  if (rank > 26) return "#" + std::to_string(w.size());
  return w.empty() ? "1" : render(w);
}

}  // namespace

VerificationReport verify_certificate(const ProblemInstance& inst,
                                      const SeparationCertificate& cert) {
  VerificationReport report;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };

  add("mode", cert.mode == inst.mode,
      std::string("certificate ") + mode_name(cert.mode) + ", instance " +
          mode_name(inst.mode));
  const bool shape_ok =
      add("rank", cert.rank == inst.rank &&
                      cert.generator_images.size() == inst.rank,
          std::to_string(cert.generator_images.size()) + " images for rank " +
              std::to_string(inst.rank)) &&
      add("degree",
          cert.degree > 0 &&
              std::all_of(cert.generator_images.begin(),
                          cert.generator_images.end(),
                          [&](const Permutation& p) {
                            return p.degree() == cert.degree;
                          }),
          "degree " + std::to_string(cert.degree)) &&
      add("base", cert.base < cert.degree,
          "base " + std::to_string(cert.base));
  if (!shape_ok) return report;

  const auto& images = cert.generator_images;
  add("transitive", is_transitive(images));

  add("subgroup check count", cert.h_checks.size() == inst.h_generators.size());
  for (std::size_t i = 0; i < inst.h_generators.size(); ++i) {
    const Word& h = inst.h_generators[i];
    const Point img = image_of_point(images, h, cert.base);
    bool ok = img == cert.base;
    if (i < cert.h_checks.size())
      ok = ok && cert.h_checks[i].word == h &&
           cert.h_checks[i].image == evaluate_word(images, h);
    add("subgroup[" + std::to_string(i) + "] " + word_text(h, inst.rank) +
            " fixes base",
        ok, "base -> " + std::to_string(img));
  }

  add("element check count", cert.gamma_checks.size() == inst.gammas.size());
  for (std::size_t i = 0; i < inst.gammas.size(); ++i) {
    const Word& g = inst.gammas[i];
    const Point img = image_of_point(images, g, cert.base);
    bool ok = img != cert.base;
    if (i < cert.gamma_checks.size())
      ok = ok && cert.gamma_checks[i].word == g &&
           cert.gamma_checks[i].image == evaluate_word(images, g);
    add("element[" + std::to_string(i) + "] " + word_text(g, inst.rank) +
            " moves base",
        ok, "base -> " + std::to_string(img));
  }

  if (inst.mode == Mode::hall) return report;

  if (!add("group recorded", cert.group.has_value() && cert.sign_vector.has_value()))
    return report;
  const GroupDescription recomputed = describe_group(images, cert.degree);
  add("order", recomputed.order == cert.group->order,
      "recomputed " + recomputed.order.str() + ", recorded " +
          cert.group->order.str());
  const Classification expected = inst.mode == Mode::alternating
                                      ? Classification::alternating
                                      : Classification::symmetric;
  add("classification",
      recomputed.classification == expected &&
          cert.group->classification == expected,
      std::string("recomputed ") + classification_name(recomputed.classification));
  add("primitive", is_transitive(images) && is_primitive(images, cert.degree));
  if (inst.mode == Mode::alternating) {
    add("generators even",
        std::all_of(images.begin(), images.end(),
                    [](const Permutation& p) { return sign(p) == 1; }));
  }
  return report;
}

}  // namespace altquot
