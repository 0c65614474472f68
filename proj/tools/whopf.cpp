#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weakhopf/fuzz.hpp"
#include "weakhopf/integrals.hpp"
#include "weakhopf/io.hpp"
#include "weakhopf/smash.hpp"
#include "weakhopf/zoo.hpp"

using namespace weakhopf;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kInputError = 2;

// Collects check sections and informational values, then prints them as text or JSON.
class Report {
 public:
  explicit Report(std::vector<std::string> command) { json_["command"] = std::move(command); }

  void section(const std::string& name, const CheckReport& r) {
    Json s;
    s["name"] = name;
    s["items"] = report_to_json(r);
    sections_.push_back(std::move(s));
    ok_ = ok_ && r.all_passed();
  }
  void fail(const std::string& name, const std::string& message) {
    Json s;
    s["name"] = name;
    s["error"] = message;
    sections_.push_back(std::move(s));
    ok_ = false;
  }
  template <class T>
  void info(const std::string& key, T value) {
    info_[key] = std::move(value);
  }
  bool ok() const { return ok_; }

  std::string render(bool as_json) {
    json_["sections"] = sections_;
    json_["info"] = info_;
    json_["status"] = ok_ ? kOk : kCheckFailed;
    if (as_json) return json_.dump(2) + "\n";
    std::ostringstream out;
    for (const auto& s : sections_) {
      out << "[" << s["name"].get<std::string>() << "]\n";
      if (s.contains("error")) {
        out << "  FAIL " << s["error"].get<std::string>() << "\n";
        continue;
      }
      for (const auto& it : s["items"]) {
        out << "  " << (it["pass"].get<bool>() ? "PASS " : "FAIL ") << it["id"].get<std::string>();
        if (it.contains("witness")) out << " at " << it["witness"].dump();
        if (it.contains("residual")) out << " residual " << it["residual"].dump();
        out << "\n";
      }
    }
    for (const auto& [k, v] : info_.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    out << "result: " << (ok_ ? "ok" : "FAILED") << "\n";
    return out.str();
  }

 private:
  Json json_;
  Json sections_ = Json::array();
  Json info_ = Json::object();
  bool ok_ = true;
};

bool input_error(Errc e) {
  switch (e) {
    case Errc::ParseError:
    case Errc::UnknownExample:
    case Errc::BadParams:
    case Errc::InvalidField:
    case Errc::FieldMismatch:
    case Errc::ShapeMismatch:
    case Errc::DimensionMismatch:
    case Errc::InvalidGroup:
    case Errc::InvalidLambda:
    case Errc::InvalidZ:
    case Errc::BadCharacteristic:
    case Errc::NotAbelian:
    case Errc::NotHopf:
    case Errc::NotSubgroup:
    case Errc::NoSuchRoot:
      return true;
    default:
      return false;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, path + ": cannot write file");
  out << text;
}


// Loads a structure file; a file holding a recipe is built in place.
Structure load_structure_file(const std::string& path, Field field) {
  Json j = read_json_file(path);
  return load_structure(j, field, fs::path(path).parent_path());
}

bool is_pair_file(const Json& j) { return j.is_object() && (j.contains("H") || j.contains("kaplansky_of")); }

void validate_structure(Report& rep, const WeakBialgebra& wb, const std::optional<Mat>& antipode) {
  rep.info("dim", wb.dim());
  rep.info("field", wb.field().name());
  CheckReport base = check_weak_bialgebra(wb);
  rep.section("weak_bialgebra", base);
  if (!base.all_passed()) return;
  std::optional<Mat> s = antipode;
  if (!s) {
    try {
      s = solve_antipode(wb);
      rep.info("antipode", "solved");
    } catch (const Error& e) {
      rep.fail("antipode", e.what());
    }
  }
  if (!s) return;
  CheckReport ax = verify_antipode(wb, *s);
  rep.section("antipode", ax);
  if (!ax.all_passed()) return;
  rep.section("identities", identity_suite(wb, *s));
  HopfCriterion hc = hopf_criterion({wb, *s});
  CheckReport coherent;
  coherent.add_flag("hopf_conditions_agree", hc.agree);
  rep.section("hopf_criterion", coherent);
  Json conds = Json::array();
  for (bool c : hc.conditions) conds.push_back(c);
  rep.info("hopf_conditions", conds);
  rep.info("hopf", hc.is_hopf());
}

struct Options {
  std::string field = "Q";
  bool json = false;
  std::string out;
  std::uint64_t seed = 1;
};

int emit(Report& rep, const Options& o) {
  std::cout << rep.render(o.json);
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_example(const std::vector<std::string>& command, const Options& o, const std::string& name,
                const std::string& group, const std::string& groups, const std::string& of,
                const std::vector<std::string>& parts) {
  Field field = Field::parse(o.field);
  Json recipe;
  recipe["example"] = name;
  auto need = [&](bool present, const char* flag) {
    if (!present) throw Error(Errc::BadParams, "example " + name + " needs " + flag);
  };
  if (name == "groupoid") {
    need(!groups.empty(), "--groups");
    recipe["groups"] = groups;
  } else if (name == "hg" || name == "group") {
    need(!group.empty(), "--group");
    recipe["group"] = group;
  } else if (name == "union") {
    need(!parts.empty(), "--parts");
    Json ps = Json::array();
    for (const auto& p : parts) ps.push_back(fs::absolute(p).string());
    recipe["parts"] = ps;
  } else if (name == "kaplansky" || name == "dual") {
    need(!of.empty() || !group.empty(), "--of or --group");
    if (!of.empty()) {
      recipe["of"] = fs::absolute(of).string();
    } else {
      Json g;
      g["example"] = "group";
      g["group"] = group;
      recipe["of"] = g;
    }
  } else {
    throw Error(Errc::UnknownExample, "unknown example \"" + name + "\"");
  }
  Structure s = structure_from_recipe(recipe, field);
  Report rep(command);
  validate_structure(rep, s.wb, s.antipode);
  std::string text = structure_to_json(s.wb, s.antipode).dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    std::cerr << rep.render(o.json);
    return rep.ok() ? kOk : kCheckFailed;
  }
  write_file(o.out, text);
  rep.info("written", o.out);
  return emit(rep, o);
}

int cmd_check(const std::vector<std::string>& command, const Options& o, const std::string& file) {
  Structure s = load_structure_file(file, Field::parse(o.field));
  Report rep(command);
  validate_structure(rep, s.wb, s.antipode);
  return emit(rep, o);
}

void matched_sections(Report& rep, MatchedPairData& mp) {
  rep.section("matched_pair", check_weak_matched_pair(mp));
  AbelianFlags ab = check_abelian(mp);
  rep.info("h_cocommutative", ab.h_cocommutative);
  rep.info("a_commutative", ab.a_commutative);
  rep.info("abelian", ab.abelian());
  if (!mp.mirrored() && ab.abelian()) {
    rep.section("compatible", check_compatible(mp));
    try {
      rep.info("target_of_action", check_target_of_action(mp).all_passed());
    } catch (const Error& e) {
      rep.info("target_of_action", std::string("not applicable: ") + e.what());
    }
  }
  if (!mp.mirrored()) {
    try {
      rep.info("classical_matched_pair", check_classical_matched_pair(mp).all_passed());
    } catch (const Error& e) {
      rep.info("classical_matched_pair", std::string("not applicable: ") + e.what());
    }
  }
}

int cmd_matched(const std::vector<std::string>& command, const Options& o, const std::string& file) {
  MatchedPairData mp = pair_from_json(read_json_file(file), fs::path(file).parent_path());
  Report rep(command);
  rep.info("dim_h", mp.h().dim());
  rep.info("dim_a", mp.a().dim());
  matched_sections(rep, mp);
  return emit(rep, o);
}

void integral_info(Report& rep, const std::string& prefix, const WeakBialgebra& wb) {
  rep.info(prefix + "left_integrals", integral_space(wb, Side::Left).dim());
  rep.info(prefix + "right_integrals", integral_space(wb, Side::Right).dim());
  MaschkeResult m = maschke_semisimple(wb);
  rep.info(prefix + "semisimple", m.semisimple);
  if (m.witness) {
    Json w = Json::array();
    for (std::size_t i = 0; i < m.witness->rows(); ++i) w.push_back(scalar_to_json((*m.witness)(i, 0)));
    rep.info(prefix + "normalized_integral", w);
  }
}

int cmd_smash(const std::vector<std::string>& command, const Options& o, const std::string& file, bool antipode,
              bool integrals) {
  MatchedPairData mp = pair_from_json(read_json_file(file), fs::path(file).parent_path());
  Report rep(command);
  classify(mp);
  if (!mp.compatible.value_or(false)) {
    matched_sections(rep, mp);
    rep.fail("smash", "the pair is not a compatible weak matched pair");
    return emit(rep, o);
  }
  SmashData sd = extract_subspace(build_ambient(mp));
  rep.info("ambient_dim", sd.ambient_dim());
  rep.info("dim", sd.dim());
  Json basis = Json::array();
  for (std::size_t i = 0; i < sd.dim(); ++i) basis.push_back(sd.sub->labels[i]);
  rep.info("basis", basis);
  rep.section("smash", check_smash_bialgebra(sd));
  if (antipode) {
    if (!mp.s_h || !mp.s_a) {
      if (!mp.s_h) mp.s_h = solve_antipode(mp.h());
      if (!mp.s_a) mp.s_a = solve_antipode(mp.a());
      sd.mp = mp;
    }
    rep.section("antipode_conditions", check_antipode_conditions(sd));
    try {
      sd = build_antipode(std::move(sd));
      rep.section("smash_antipode", verify_antipode(*sd.sub, *sd.antipode));
      HopfCriterion hc = hopf_criterion(sd.hopf());
      Json conds = Json::array();
      for (bool c : hc.conditions) conds.push_back(c);
      rep.info("hopf_conditions", conds);
      rep.info("hopf", hc.is_hopf());
    } catch (const Error& e) {
      rep.fail("smash_antipode", e.what());
    }
  }
  if (integrals) {
    integral_info(rep, "a_", sd.mp.a());
    integral_info(rep, "h_", sd.mp.h());
    integral_info(rep, "smash_", *sd.sub);
    SmashSemisimplicity ss = smash_semisimple_criterion(sd);
    rep.info("smash_semisimple_criterion", ss.criterion);
    CheckReport agree;
    agree.add_flag("criterion_matches_direct", ss.agree());
    rep.section("semisimplicity", agree);
  }
  if (!o.out.empty()) {
    write_file(o.out, structure_to_json(*sd.sub, sd.antipode).dump(2) + "\n");
    rep.info("written", o.out);
  }
  return emit(rep, o);
}

int cmd_integrals(const std::vector<std::string>& command, const Options& o, const std::string& file) {
  Structure s = load_structure_file(file, Field::parse(o.field));
  Report rep(command);
  rep.info("dim", s.wb.dim());
  rep.section("weak_bialgebra", check_weak_bialgebra(s.wb));
  if (rep.ok()) integral_info(rep, "", s.wb);
  return emit(rep, o);
}

int cmd_dual(const std::vector<std::string>& command, const Options& o, const std::string& file) {
  Json j = read_json_file(file);
  Report rep(command);
  if (is_pair_file(j)) {
    MatchedPairData mp = pair_from_json(j, fs::path(file).parent_path());
    MatchedPairData d = build_dual_matched_pair(mp);
    rep.info("dim_h", d.h().dim());
    rep.info("dim_a", d.a().dim());
    matched_sections(rep, d);
    return emit(rep, o);
  }
  Structure s = load_structure(j, Field::parse(o.field), fs::path(file).parent_path());
  WeakBialgebra d = build_dual(s.wb);
  std::optional<Mat> sd;
  if (s.antipode) sd = s.antipode->transpose();
  validate_structure(rep, d, sd);
  std::string text = structure_to_json(d, sd).dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    std::cerr << rep.render(o.json);
    return rep.ok() ? kOk : kCheckFailed;
  }
  write_file(o.out, text);
  rep.info("written", o.out);
  return emit(rep, o);
}

int cmd_fuzz(const std::vector<std::string>& command, const Options& o, std::size_t trials, std::size_t candidates) {
  Report rep(command);
  rep.info("seed", o.seed);
  CheckReport corrupt;
  std::size_t caught = 0;
  auto ts = run_corruption_trials(o.seed, trials);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto& t = ts[i];
    std::ostringstream id;
    id << "trial " << i << ": " << t.instance << " " << corruption_name(t.target) << "(" << t.row << "," << t.col
       << ") += " << t.delta << " -> " << (t.caught() ? t.caught_by : "unnoticed");
    CheckItem it{id.str(), t.caught(), std::nullopt, std::nullopt};
    if (t.caught()) it.witness = t.witness;
    caught += t.caught();
    corrupt.add(std::move(it));
  }
  rep.section("corruptions", corrupt);
  rep.info("corruptions_caught", std::to_string(caught) + "/" + std::to_string(ts.size()));

  CheckReport cand;
  std::size_t accepted = 0;
  auto cs = run_candidate_trials(o.seed, candidates);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto& c = cs[i];
    std::ostringstream id;
    id << "candidate " << i << ": " << c.kind << " = [";
    for (std::size_t k = 0; k < c.values.size(); ++k) id << (k ? "," : "") << c.values[k];
    id << "] " << (c.violation.empty() ? "accepted" : "rejected (" + c.violation + ")");
    accepted += c.violation.empty();
    cand.add_flag(id.str(), c.agrees());
  }
  rep.section("candidates", cand);
  rep.info("candidates_accepted", std::to_string(accepted) + "/" + std::to_string(cs.size()));
  return emit(rep, o);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> command(argv + 1, argv + argc);
  CLI::App app{"Weak Hopf algebra toolkit: zoo, matched pairs, smash products and integrals"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool field, bool out) {
    if (field) sub->add_option("--field", o.field, "Q or Fp:<p>");
    sub->add_flag("--json", o.json, "machine-readable report");
    if (out) sub->add_option("--out", o.out, "output file");
  };

  std::string name, group, groups, of, file;
  std::vector<std::string> parts;
  bool antipode = false, integrals = false;
  std::size_t trials = 200, candidates = 100;

  auto* ex = app.add_subcommand("example", "build a zoo structure and validate it");
  ex->add_option("name", name, "groupoid, group, hg, union, kaplansky or dual")->required();
  ex->add_option("--group", group, "group such as C2, C2xC3 or S3");
  ex->add_option("--groups", groups, "comma separated groups of a groupoid");
  ex->add_option("--of", of, "structure file for kaplansky or dual");
  ex->add_option("--parts", parts, "structure files of a disjoint union");
  common(ex, true, true);

  auto* ck = app.add_subcommand("check", "validate a structure file");
  ck->add_option("file", file)->required();
  common(ck, true, false);

  auto* mt = app.add_subcommand("matched", "check a matched pair file");
  mt->add_option("file", file)->required();
  common(mt, false, false);

  auto* sm = app.add_subcommand("smash", "build and check the smash product of a pair file");
  sm->add_option("file", file)->required();
  sm->add_flag("--antipode", antipode, "also build and verify the antipode");
  sm->add_flag("--integrals", integrals, "report integrals and semisimplicity");
  common(sm, false, true);

  auto* in = app.add_subcommand("integrals", "integral spaces and semisimplicity of a structure");
  in->add_option("file", file)->required();
  common(in, true, false);

  auto* du = app.add_subcommand("dual", "dual of a structure or of a matched pair");
  du->add_option("file", file)->required();
  common(du, true, true);

  auto* fz = app.add_subcommand("fuzz", "seeded corruption and candidate trials");
  fz->add_option("--seed", o.seed, "random seed");
  fz->add_option("--trials", trials, "corruption trials");
  fz->add_option("--candidates", candidates, "lambda and z candidates");
  common(fz, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*ex) return cmd_example(command, o, name, group, groups, of, parts);
    if (*ck) return cmd_check(command, o, file);
    if (*mt) return cmd_matched(command, o, file);
    if (*sm) return cmd_smash(command, o, file, antipode, integrals);
    if (*in) return cmd_integrals(command, o, file);
    if (*du) return cmd_dual(command, o, file);
    if (*fz) return cmd_fuzz(command, o, trials, candidates);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error(e.code()) ? kInputError : kCheckFailed;
  } catch (const Json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
