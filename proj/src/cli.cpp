#include "altquot/cli.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <istream>
#include <ostream>
#include <thread>

#include "altquot/certificate_io.hpp"
#include "altquot/errors.hpp"
#include "altquot/separation.hpp"
#include "altquot/stallings.hpp"

namespace altquot::cli {

namespace {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::gamma_in_subgroup: return kGammaInSubgroup;
    case Errc::finite_index_subgroup: return kFiniteIndex;
    case Errc::rank_too_small: return kRankTooSmall;
    case Errc::verification_exhausted: return kVerificationExhausted;
    default: return kInvalidInput;
  }
}

Json read_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

struct Outcome {
  int code = kOk;
  std::string message;
  const char* error_name = nullptr;
  Json document;
};

// Runs `body` and folds every failure into an exit code and a one-line
// message.
template <typename Body>
Outcome guarded(Body&& body) {
  Outcome o;
  try {
    o.document = body();
  } catch (const Error& e) {
    o.code = exit_code_for(e.code());
    o.error_name = errc_name(e.code());
    o.message = e.what();
  } catch (const SchemaError& e) {
    o.code = kInvalidInput;
    o.error_name = "InvalidInput";
    o.message = e.what();
  } catch (const nlohmann::json::exception& e) {
    o.code = kInvalidInput;
    o.error_name = "InvalidInput";
    o.message = e.what();
  } catch (const std::invalid_argument& e) {
    o.code = kInvalidInput;
    o.error_name = "InvalidInput";
    o.message = e.what();
  }
  return o;
}

int report_failure(const Outcome& o, std::ostream& err) {
  err << "error: " << o.error_name << ": " << o.message << '\n';
  return o.code;
}

}  // namespace

int cmd_separate(std::istream& in, std::ostream& out, std::ostream& err,
                 bool batch, unsigned jobs) {
  if (!batch) {
    Outcome o = guarded([&] {
      const ProblemInstance inst = instance_from_json(read_json(in));
      return certificate_to_json(separate(inst));
    });
    if (o.code != kOk) return report_failure(o, err);
    out << o.document.dump(2) << '\n';
    return kOk;
  }

  Json docs;
  {
    Outcome o = guarded([&] { return read_json(in); });
    if (o.code != kOk) return report_failure(o, err);
    docs = std::move(o.document);
  }
  if (!docs.is_array()) {
    err << "error: InvalidInput: batch input must be a JSON array\n";
    return kInvalidInput;
  }

  std::vector<Outcome> results(docs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < docs.size(); i = next++) {
      results[i] = guarded([&] {
        return certificate_to_json(separate(instance_from_json(docs[i])));
      });
    }
  };
  unsigned threads = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(docs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Json out_docs = Json::array();
  int code = kOk;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Outcome& o = results[i];
    if (o.code == kOk) {
      out_docs.push_back(o.document);
      continue;
    }
    Json e;
    e["error"]["name"] = o.error_name;
    e["error"]["exit_code"] = o.code;
    e["error"]["message"] = o.message;
    out_docs.push_back(std::move(e));
    if (code == kOk) code = o.code;
    err << "error: instance " << i << ": " << o.error_name << ": " << o.message
        << '\n';
  }
  out << out_docs.dump(2) << '\n';
  return code;
}

int cmd_member(std::size_t rank, const std::vector<std::string>& subgroup,
               const std::string& word, std::ostream& out, std::ostream& err) {
  Outcome o = guarded([&] {
    if (rank < 1 || rank > 26) throw SchemaError("rank must be in 1..26");
    const auto gens = parse_words(subgroup, rank);
    const Word w = parse_word(word, rank);
    return Json(is_member(rank, gens, w));
  });
  if (o.code != kOk) return report_failure(o, err);
  out << (o.document.get<bool>() ? "true" : "false") << '\n';
  return kOk;
}

int cmd_export_dot(DotStage stage, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  std::string text;
  Outcome o = guarded([&] {
    const ProblemInstance inst = instance_from_json(read_json(in));
    switch (stage) {
      case DotStage::core:
        text = to_dot(core_graph(inst.rank, inst.h_generators), "core");
        break;
      case DotStage::z:
        text = to_dot(canonical_form(build_z(inst)), "z");
        break;
      case DotStage::cover:
        text = to_dot(canonical_form(construct(inst).cover), "cover");
        break;
    }
    return Json();
  });
  if (o.code != kOk) return report_failure(o, err);
  out << text;
  return kOk;
}

int cmd_verify(std::istream& instance, std::istream& certificate,
               std::ostream& out, std::ostream& err, bool json) {
  VerificationReport report;
  Outcome o = guarded([&] {
    const ProblemInstance inst = instance_from_json(read_json(instance));
    const SeparationCertificate cert = certificate_from_json(read_json(certificate));
    report = verify_certificate(inst, cert);
    return Json();
  });
  if (o.code != kOk) return report_failure(o, err);

  if (json) {
    out << report_to_json(report).dump(2) << '\n';
  } else {
    std::size_t width = 0;
    for (const CheckEntry& c : report.checks) width = std::max(width, c.name.size());
    for (const CheckEntry& c : report.checks) {
      out << (c.passed ? "PASS  " : "FAIL  ");
      if (c.detail.empty())
        out << c.name;
      else
        out << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
            << c.detail;
      out << '\n';
    }
    out << (report.passed() ? "certificate verified" : "certificate REJECTED")
        << '\n';
  }
  return report.passed() ? kOk : kCheckFailed;
}

}  // namespace altquot::cli
