#include <doctest.h>

#include <sstream>

#include "altquot/certificate_io.hpp"
#include "altquot/cli.hpp"

using namespace altquot;
using namespace altquot::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run separate_text(const std::string& input, bool batch = false) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cmd_separate(in, out, err, batch, 2);
  return {code, out.str(), err.str()};
}

Run verify_text(const std::string& inst, const std::string& cert) {
  std::istringstream i(inst), c(cert);
  std::ostringstream out, err;
  const int code = cmd_verify(i, c, out, err);
  return {code, out.str(), err.str()};
}

Run dot_text(DotStage stage, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cmd_export_dot(stage, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kAlt =
    R"({"rank":2,"subgroup":["a"],"elements":["b"],"mode":"alternating"})";

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("cmd_separate") {
  const Run r = separate_text(kAlt);
  REQUIRE(r.code == kOk);
  const Json doc = Json::parse(r.out);
  CHECK(doc["degree"] == 7);
  CHECK(doc["order"] == "2520");
  CHECK(doc["classification"] == "alternating");
  CHECK(separate_text(kAlt).out == r.out);

  const Run hall = separate_text(R"({"rank":2,"subgroup":["a"],"elements":["a"],"mode":"hall"})");
  CHECK(hall.code == kGammaInSubgroup);
  CHECK(hall.err.find("GammaInSubgroup") != std::string::npos);
  CHECK(count(hall.err, "\n") == 1);
  CHECK(separate_text(R"({"rank":1,"subgroup":["aa"],"elements":["a"],"mode":"alternating"})").code ==
        kRankTooSmall);
  CHECK(separate_text(R"({"rank":2,"subgroup":["aa","b","abA"],"elements":["a"],"mode":"symmetric"})")
            .code == kFiniteIndex);
  CHECK(separate_text("{not json").code == kInvalidInput);
  CHECK(separate_text(R"({"rank":2,"subgroup":["a"],"elements":["c"],"mode":"hall"})").code ==
        kInvalidInput);
  CHECK(separate_text(R"({"rank":2,"subgroup":["a"],"elements":[],"mode":"hall"})").code ==
        kInvalidInput);
  CHECK(separate_text(R"({"rank":2,"subgroup":["a"],"elements":["b"],"mode":"cyclic"})").code ==
        kInvalidInput);
  CHECK(separate_text(R"({"rank":2,"subgroup":"a","elements":["b"],"mode":"hall"})").code ==
        kInvalidInput);
}

TEST_CASE("certificate documents round-trip") {
  for (const char* mode : {"hall", "alternating", "symmetric"}) {
    const std::string input = std::string(R"({"rank":3,"subgroup":["ab","cA"],"elements":["b","acc"],"mode":")") +
                              mode + "\"}";
    const ProblemInstance inst = instance_from_json(Json::parse(input));
    const SeparationCertificate cert = separate(inst);
    const Json doc = certificate_to_json(cert);
    CHECK(certificate_from_json(doc) == cert);
    CHECK(certificate_to_json(certificate_from_json(doc)).dump() == doc.dump());
    CHECK(instance_from_json(instance_to_json(inst)).gammas == inst.gammas);
  }
}

TEST_CASE("cmd_verify") {
  const std::string cert = separate_text(kAlt).out;
  const Run ok = verify_text(kAlt, cert);
  CHECK(ok.code == kOk);
  CHECK(ok.out.find("certificate verified") != std::string::npos);

  Json tampered = Json::parse(cert);
  tampered["images"]["b"]["array"] = {0, 1, 2, 3, 4, 5, 6};
  const Run bad = verify_text(kAlt, tampered.dump());
  CHECK(bad.code == kCheckFailed);
  CHECK(bad.out.find("FAIL") != std::string::npos);

  Json short_image = Json::parse(cert);
  short_image["images"]["a"]["array"] = {0, 1, 2};
  CHECK(verify_text(kAlt, short_image.dump()).code == kInvalidInput);

  Json not_perm = Json::parse(cert);
  not_perm["images"]["a"]["array"] = {0, 0, 1, 2, 3, 4, 5};
  CHECK(verify_text(kAlt, not_perm.dump()).code == kInvalidInput);

  CHECK(verify_text(kAlt, "[]").code == kInvalidInput);

  std::istringstream i(kAlt), c(cert);
  std::ostringstream out, err;
  CHECK(cmd_verify(i, c, out, err, true) == kOk);
  CHECK(Json::parse(out.str())["passed"] == true);
}

TEST_CASE("cmd_member") {
  auto member = [](std::size_t rank, std::vector<std::string> h, std::string w) {
    std::ostringstream out, err;
    const int code = cmd_member(rank, h, w, out, err);
    return std::make_pair(code, out.str());
  };
  CHECK(member(2, {"a", "baB"}, "baB") == std::make_pair(0, std::string("true\n")));
  CHECK(member(2, {"a", "baB"}, "b") == std::make_pair(0, std::string("false\n")));
  CHECK(member(2, {}, "") == std::make_pair(0, std::string("true\n")));
  CHECK(member(2, {"a"}, "x?").first == kInvalidInput);
}

TEST_CASE("cmd_export_dot") {
  const Run core = dot_text(DotStage::core,
                            R"({"rank":2,"subgroup":["a"],"elements":["b"],"mode":"hall"})");
  CHECK(core.code == kOk);
  CHECK(count(core.out, "shape=") == 1);
  CHECK(count(core.out, "->") == 1);
  CHECK(core.out.find("0 -> 0 [label=\"a\"]") != std::string::npos);

  const Run z = dot_text(DotStage::z, kAlt);
  CHECK(count(z.out, "shape=") == 2);
  CHECK(z.out.find("0 -> 0 [label=\"a\"]") != std::string::npos);
  CHECK(z.out.find("0 -> 1 [label=\"b\"]") != std::string::npos);

  const Run cover = dot_text(DotStage::cover, kAlt);
  CHECK(count(cover.out, "shape=") == 7);
  CHECK(count(cover.out, "doublecircle") == 1);
  CHECK(count(cover.out, "[label=\"a\"]") == 7);
  CHECK(count(cover.out, "[label=\"b\"]") == 7);

  CHECK(dot_text(DotStage::z, R"({"rank":2,"subgroup":["a"],"elements":["a"],"mode":"hall"})").code ==
        kGammaInSubgroup);
  CHECK(dot_text(DotStage::cover,
                 R"({"rank":2,"subgroup":["aa","b","abA"],"elements":["a"],"mode":"alternating"})")
            .code == kFiniteIndex);
}

TEST_CASE("batch mode keeps order and isolates failures") {
  const std::string input = "[" + kAlt + R"(,{"rank":2,"subgroup":["a"],"elements":["a"],"mode":"hall"},)" +
                            R"({"rank":3,"subgroup":["abc"],"elements":["cc"],"mode":"symmetric"}])";
  const Run r = separate_text(input, true);
  CHECK(r.code == kGammaInSubgroup);
  const Json doc = Json::parse(r.out);
  REQUIRE(doc.size() == 3);
  CHECK(doc[0]["order"] == "2520");
  CHECK(doc[1]["error"]["exit_code"] == kGammaInSubgroup);
  CHECK(doc[2]["classification"] == "symmetric");
  CHECK(separate_text(input, true).out == r.out);
  CHECK(separate_text(kAlt, true).code == kInvalidInput);
}
