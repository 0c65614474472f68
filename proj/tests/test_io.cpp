#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracle.hpp"
#include "weakhopf/groups.hpp"
#include "weakhopf/io.hpp"
#include "weakhopf/zoo.hpp"

using namespace weakhopf;
namespace fs = std::filesystem;

namespace {

Field Q = Field::rationals();
FiniteGroupTable C(std::size_t n) { return FiniteGroupTable::cyclic(n); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::ParseError;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

Json hg_c2_json() { return structure_to_json(build_HG(C(2), Q).wb, build_HG(C(2), Q).antipode); }

}  // namespace

TEST_CASE("fields and scalars") {
  CHECK(field_from_json("Q").is_rational());
  CHECK(field_from_json(Json::parse(R"({"Fp": 7})")).characteristic() == 7);
  CHECK(field_from_json("Fp:5").characteristic() == 5);
  CHECK(code_of([] { field_from_json(Json::parse(R"({"Fp": 6})")); }) == Errc::ParseError);
  CHECK(code_of([] { field_from_json(3); }) == Errc::ParseError);
  CHECK(field_to_json(Field::prime(5)) == Json::parse(R"({"Fp": 5})"));

  CHECK(scalar_from_json(Q, "-2/4") == Scalar::rational(-1, 2));
  CHECK(scalar_from_json(Q, 3) == Scalar(Q, 3));
  CHECK(scalar_to_json(Scalar::rational(1, 3)) == "1/3");
  CHECK(scalar_to_json(Scalar(Q, -4)) == -4);
  Field f5 = Field::prime(5);
  CHECK(scalar_from_json(f5, 4) == Scalar(f5, 4));
  CHECK(code_of([&] { scalar_from_json(f5, 5); }) == Errc::ParseError);
  CHECK(code_of([&] { scalar_from_json(f5, "1/2"); }) == Errc::ParseError);
  CHECK(code_of([] { scalar_from_json(Q, 1.5); }) == Errc::ParseError);
}

TEST_CASE("structure files round-trip") {
  std::vector<WeakHopfAlgebra> zoo = {build_HG(C(3), Q), build_HG(FiniteGroupTable::parse("C2xC2"), Field::prime(7)),
                                      build_groupoid_algebra({C(2), C(3)}, Q),
                                      build_kaplansky(build_group_algebra(C(2), Q)), build_dual(build_HG(C(2), Q))};
  for (const auto& h : zoo) {
    std::string text = structure_to_json(h.wb, h.antipode).dump(2);
    Structure s = structure_from_json(Json::parse(text));
    REQUIRE(s.antipode);
    CHECK(oracle::same_constants(s.hopf(), h));
    CHECK(s.wb.labels == h.wb.labels);
    CHECK(structure_to_json(s.wb, s.antipode).dump(2) == text);
    CHECK(validate(s.hopf()).all_passed());
  }
  // ℋ^{C_2}: ε(1) = 2 and Δ(1) has coefficient 1/2 on 1⊗1
  Json j = hg_c2_json();
  CHECK(j["counit"][0] == 2);
  CHECK(j["comult"][0][0][0] == "1/2");
  CHECK(j["mult"][1][1][0] == 1);
}

TEST_CASE("parse errors carry the location") {
  Json j = hg_c2_json();
  j["mult"][1].erase(1);
  std::string m = message_of([&] { structure_from_json(j); });
  CHECK(m.find("/mult/1") != std::string::npos);

  j = hg_c2_json();
  j.erase("counit");
  CHECK(message_of([&] { structure_from_json(j); }).find("counit") != std::string::npos);

  j = hg_c2_json();
  j["unit"][1] = "x";
  m = message_of([&] { structure_from_json(j); });
  CHECK(m.find("/unit/1") != std::string::npos);
  CHECK(code_of([&] { structure_from_json(j); }) == Errc::ParseError);

  j = hg_c2_json();
  j["dim"] = 0;
  CHECK(code_of([&] { structure_from_json(j); }) == Errc::ParseError);

  Json pair = Json::parse(R"({"H": {"example": "hg", "group": "C2"}, "A": {"field": "Q", "dim": 1}, "action": "multiplication", "coaction": "comultiplication"})");
  CHECK(message_of([&] { pair_from_json(pair, "."); }).find("/A") != std::string::npos);
}

TEST_CASE("recipes") {
  auto build = [](const char* text) { return structure_from_recipe(Json::parse(text), Field::rationals()); };
  CHECK(oracle::same_constants(build(R"({"example": "hg", "group": "C2"})").hopf(), build_HG(C(2), Q)));
  WeakHopfAlgebra g = build_groupoid_algebra({C(2), C(3)}, Q);
  CHECK(oracle::same_constants(build(R"({"example": "groupoid", "groups": "C2,C3"})").hopf(), g));
  CHECK(oracle::same_constants(build(R"({"example": "groupoid", "groups": ["C2", "C3"]})").hopf(), g));
  CHECK(oracle::same_constants(
      build(R"({"example": "union", "parts": [{"example": "group", "group": "C2"}, {"example": "group", "group": "C3"}]})")
          .hopf(),
      g));
  CHECK(build(R"({"example": "kaplansky", "of": {"example": "group", "group": "C2"}})").wb.dim() == 3);
  CHECK(build(R"({"example": "dual", "of": {"example": "hg", "group": "C3"}})").wb.dim() == 3);
  CHECK(build(R"({"example": "hg", "group": "C3", "field": {"Fp": 7}})").wb.field().characteristic() == 7);

  CHECK(code_of([&] { build(R"({"example": "torus"})"); }) == Errc::UnknownExample);
  CHECK(code_of([&] { build(R"({"example": "hg", "group": "C2", "field": "Fp:2"})"); }) == Errc::BadParams);
  CHECK(code_of([&] { build(R"({"example": "hg", "group": "Z"})"); }) == Errc::BadParams);
  CHECK(code_of([&] { build(R"({"example": "kaplansky", "of": {"example": "hg", "group": "C2"}})"); }) ==
        Errc::BadParams);
  CHECK(code_of([&] { build(R"({"example": "hg"})"); }) == Errc::ParseError);
}

TEST_CASE("structure and pair files on disk") {
  fs::path dir = fs::temp_directory_path() / "weakhopf_io_test";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "h.json");
    out << hg_c2_json().dump();
  }
  {
    std::ofstream out(dir / "pair.json");
    out << R"({"H": "h.json", "A": "h.json", "action": "multiplication", "coaction": "comultiplication"})";
  }
  Structure s = load_structure("h.json", Q, dir);
  CHECK(s.wb.dim() == 2);
  MatchedPairData mp = pair_from_json(read_json_file(dir / "pair.json"), dir);
  CHECK(check_weak_matched_pair(mp).all_passed());
  CHECK(code_of([&] { read_json_file(dir / "missing.json"); }) == Errc::ParseError);
  {
    std::ofstream out(dir / "broken.json");
    out << "{\"field\": ";
  }
  CHECK(code_of([&] { read_json_file(dir / "broken.json"); }) == Errc::ParseError);
  fs::remove_all(dir);
}

TEST_CASE("the example pair files") {
  for (const char* f : {"hg_c2.json", "hg_c2xc2.json", "lambda_z.json", "kaplansky.json"}) {
    CAPTURE(f);
    MatchedPairData mp = pair_from_json(read_json_file(std::string(PAIRS_DIR) + "/" + f), PAIRS_DIR);
    CHECK(check_weak_matched_pair(mp).all_passed());
  }
  MatchedPairData k = pair_from_json(read_json_file(std::string(PAIRS_DIR) + "/kaplansky.json"), PAIRS_DIR);
  CHECK(k.h().dim() == 3);
  CHECK(k.a().dim() == 4);
  CHECK(k.s_h.has_value());

  Json bad = Json::parse(R"({"H": {"example": "groupoid", "groups": "C2,C3"}, "A": {"example": "groupoid", "groups": "C2,C3"},
                             "action": {"lambda": [0, 1, 0, 0, 0]}, "coaction": {"z": [0, 0, 1, 0, 0]}})");
  CHECK(code_of([&] { pair_from_json(bad, "."); }) == Errc::InvalidLambda);
  bad["action"] = "conjugation";
  CHECK(code_of([&] { pair_from_json(bad, "."); }) == Errc::ParseError);
  bad["action"] = Json::parse(R"({"lambda": [1, 1, 0, 0, 0]})");
  bad["coaction"] = Json::parse(R"({"z": [1, 0, 1, 0, 0]})");
  CHECK(code_of([&] { pair_from_json(bad, "."); }) == Errc::InvalidZ);
  bad["coaction"] = "comultiplication";
  CHECK_NOTHROW(pair_from_json(bad, "."));
  bad["A"] = Json::parse(R"({"example": "group", "group": "C3"})");
  bad.erase("action");
  bad["action"] = "multiplication";
  CHECK(code_of([&] { pair_from_json(bad, "."); }) == Errc::BadParams);
}

TEST_CASE("reports as JSON") {
  WeakHopfAlgebra h = build_HG(C(2), Q);
  h.wb.coalg.counit(0, 1) = Scalar(Q, 1);
  Json r = report_to_json(check_weak_bialgebra(h.wb));
  bool failing_with_witness = false;
  for (const auto& it : r) {
    CHECK(it.contains("id"));
    if (!it["pass"].get<bool>()) {
      CHECK(it.contains("residual"));
      if (it.contains("witness")) failing_with_witness = true;
    } else {
      CHECK(!it.contains("residual"));
    }
  }
  CHECK(failing_with_witness);
  CHECK(matrix_to_json(Mat::identity(Q, 2)) == Json::parse("[[1,0],[0,1]]"));
}
