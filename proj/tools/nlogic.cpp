#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nlogic/acceptance.hpp"
#include "nlogic/correspond.hpp"
#include "nlogic/duality.hpp"
#include "nlogic/frame_axioms.hpp"
#include "nlogic/frame_io.hpp"
#include "nlogic/gen.hpp"
#include "nlogic/report.hpp"
#include "nlogic/semantics.hpp"

using namespace nlogic;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int finish(const RunReport& report, ReportFormat fmt) {
  std::cout << report.render(fmt);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite implicative logics over two-sorted polarity frames"};
  app.require_subcommand(1);
  std::string format = "human";
  app.add_option("--format", format, "output format: human | json-lines")->capture_default_str();
  auto fmt = [&] { return format == "json-lines" ? ReportFormat::JsonLines : ReportFormat::Human; };

  // check-algebra
  auto* ca = app.add_subcommand("check-algebra", "validate an algebra file");
  std::string ca_file;
  bool ca_allow_empty = false;
  ca->add_option("file", ca_file)->required();
  ca->add_flag("--allow-empty", ca_allow_empty, "count the empty filter and ideal too");

  // dualize
  auto* du = app.add_subcommand("dualize", "build the canonical filter/ideal frame");
  std::string du_file, du_sig = "auto", du_out, du_sidecar;
  bool du_check = false;
  du->add_option("file", du_file)->required();
  du->add_option("--signature", du_sig, "poset|semilattice|lattice|lambek|auto")
      ->capture_default_str();
  du->add_option("-o,--out", du_out, "write the frame file here");
  du->add_option("--sidecar", du_sidecar, "write the point-contents table here");
  du->add_flag("--check", du_check, "run the representation/extension verifications");

  // check-frame
  auto* cfm = app.add_subcommand("check-frame", "check frame-class axioms");
  std::string cf_file, cf_class;
  cfm->add_option("file", cf_file)->required();
  cfm->add_option("--class", cf_class, "PU|PUl|PUl*|PUl_*|S|L|LK|LK*|LK_*")->required();

  // eval
  auto* ev = app.add_subcommand("eval", "evaluate a formula or sequent on a model");
  std::string ev_frame, ev_formula, ev_sequent, ev_valuation;
  ev->add_option("frame", ev_frame)->required();
  ev->add_option("--formula", ev_formula);
  ev->add_option("--sequent", ev_sequent);
  ev->add_option("--valuation", ev_valuation, "valuation file (p1: x0 x1 per line)");

  // valid
  auto* va = app.add_subcommand("valid", "sequent validity over all stable valuations");
  std::string va_frame, va_sequent;
  int va_maxvars = 8;
  va->add_option("frame", va_frame)->required();
  va->add_option("--sequent", va_sequent)->required();
  va->add_option("--max-vars", va_maxvars)->capture_default_str();

  // correspond
  auto* co = app.add_subcommand("correspond", "compute a first-order frame correspondent");
  std::string co_sequent, co_class, co_mode = "auto", co_side = "auto";
  bool co_trace = false;
  co->add_option("--sequent", co_sequent)->required();
  co->add_option("--class", co_class)->required();
  co->add_option("--mode", co_mode, "auto|table6|rspoon")->capture_default_str();
  co->add_option("--side", co_side, "auto|translate|cotranslate")->capture_default_str();
  co->add_flag("--trace", co_trace, "print the reduction trace");

  // verify
  auto* vf = app.add_subcommand("verify", "cross-check correspondent against validity");
  std::string vf_sequent, vf_class, vf_frames_dir;
  int vf_enumerate = 0;
  std::uint64_t vf_seed = 20250810ull;
  vf->add_option("--sequent", vf_sequent)->required();
  vf->add_option("--class", vf_class)->required();
  vf->add_option("--frames", vf_frames_dir, "directory of .frame files");
  vf->add_option("--enumerate", vf_enumerate, "sample this many seeded class frames");
  vf->add_option("--seed", vf_seed)->capture_default_str();

  // selftest
  auto* st = app.add_subcommand("selftest", "run the bundled acceptance criteria");
  std::string st_fixtures = "fixtures";
  int st_only = 0;
  bool st_goldens = false;
  st->add_option("--fixtures", st_fixtures)->capture_default_str();
  st->add_option("--criterion", st_only, "run a single criterion (1..11)");
  st->add_flag("--print-goldens", st_goldens, "print computed golden correspondents");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ca) {
      std::string text = slurp(ca_file);
      RunReport report;
      report.command = "check-algebra " + ca_file;
      report.input_digest = digest_hex(text);
      auto alg = validate_algebra(parse_algebra_text(text));
      report.add("algebra", true, alg.describe());
      auto fs = enumerate_filters(alg, ca_allow_empty);
      auto is = enumerate_ideals(alg, ca_allow_empty);
      report.add("filters", true, std::to_string(fs.members.size()));
      report.add("ideals", true, std::to_string(is.members.size()));
      return finish(report, fmt());
    }
    if (*du) {
      std::string text = slurp(du_file);
      auto alg = validate_algebra(parse_algebra_text(text));
      Signature sig = du_sig == "auto" ? default_signature(alg) : signature_from_string(du_sig);
      auto cf = canonical_frame(alg, sig);
      RunReport report;
      report.command = "dualize " + du_file;
      report.input_digest = digest_hex(text);
      report.add("signature", true, to_string(sig));
      report.add("u-policy", true, cf.u_policy);
      report.add("frame", true,
                 std::to_string(cf.frame.n1) + " filters, " + std::to_string(cf.frame.nD) +
                     " ideals");
      std::string frame_text = frame_to_text(cf.frame);
      if (!du_out.empty()) {
        std::ofstream out(du_out);
        out << frame_text;
      } else {
        std::cout << frame_text;
      }
      std::ostringstream side;
      for (int i = 0; i < cf.frame.n1; ++i)
        side << cf.frame.names1[i] << " = " << set_to_string(cf.filters[i], alg.names) << "\n";
      for (int i = 0; i < cf.frame.nD; ++i)
        side << cf.frame.namesD[i] << " = " << set_to_string(cf.ideals[i], alg.names) << "\n";
      if (!du_sidecar.empty()) {
        std::ofstream out(du_sidecar);
        out << side.str();
      } else {
        std::cout << side.str();
      }
      if (du_check) {
        std::vector<VerifyReport> checks = {
            verify_embedding(alg, cf), verify_canonical_extension(alg, cf),
            verify_pi_extension(alg, cf), verify_canonical_class(alg, cf)};
        for (auto& vr : checks)
          for (auto& l : vr.lines) report.add(vr.title + "/" + l.id, l.pass, l.detail);
      }
      return finish(report, fmt());
    }
    if (*cfm) {
      std::string text = slurp(cf_file);
      auto frame = parse_frame_text(text);
      auto cls_report = check_frame_class(frame, cf_class);
      RunReport report;
      report.command = "check-frame " + cf_file + " --class " + cf_class;
      report.input_digest = digest_hex(text);
      for (auto& ax : cls_report.axioms) report.add(ax.id, ax.pass, ax.witness);
      return finish(report, fmt());
    }
    if (*ev) {
      std::string text = slurp(ev_frame);
      auto frame = parse_frame_text(text);
      VarTable vars;
      ObjectModel model;
      model.frame = &frame;
      if (!ev_valuation.empty()) model = load_valuation(frame, slurp(ev_valuation), vars);
      RunReport report;
      report.command = "eval " + ev_frame;
      report.input_digest = digest_hex(text);
      for (auto& note : model.notes) report.add("valuation-note", true, note);
      if (frame.has_t && !check_axiom(frame, "F1(T)").pass)
        report.add("frame-note", true,
                   "frame fails F1(T): the two implication clauses may diverge here");
      if (!ev_formula.empty()) {
        auto f = parse_formula(ev_formula, vars);
        auto ext = eval_object(model, f);
        report.add("extent", true, set_to_string(ext.extent, frame.names1));
        report.add("co-extent", true, set_to_string(ext.co_extent, frame.namesD));
      }
      if (!ev_sequent.empty()) {
        auto s = parse_sequent(ev_sequent, vars);
        auto chk = check_sequent(model, s);
        report.add("sequent", chk.holds,
                   chk.holds ? "" : "fails at " + frame.names1[chk.witness]);
      }
      return finish(report, fmt());
    }
    if (*va) {
      std::string text = slurp(va_frame);
      auto frame = parse_frame_text(text);
      VarTable vars;
      auto s = parse_sequent(va_sequent, vars);
      auto res = check_validity(frame, s, va_maxvars);
      RunReport report;
      report.command = "valid " + va_frame;
      report.input_digest = digest_hex(text);
      std::ostringstream os;
      if (!res.valid) {
        os << "counter-valuation:";
        for (auto& [v, bits] : res.counter_valuation)
          os << " " << vars.names[v] << "=" << set_to_string(bits, frame.names1);
        os << " witness " << frame.names1[res.witness];
      } else {
        os << res.assignments << " stable valuations";
      }
      report.add("valid", res.valid, os.str());
      return finish(report, fmt());
    }
    if (*co) {
      VarTable vars;
      auto seq = parse_sequent(co_sequent, vars);
      SidePolicy side = co_side == "translate"     ? SidePolicy::Translate
                        : co_side == "cotranslate" ? SidePolicy::Cotranslate
                                                   : SidePolicy::Auto;
      std::optional<TransMode> mode;
      if (co_mode == "table6") mode = TransMode::TRight;
      if (co_mode == "rspoon") mode = TransMode::Residual;
      auto run = correspond(seq, co_class, side, mode);
      RunReport report;
      report.command = "correspond --sequent \"" + co_sequent + "\" --class " + co_class;
      report.input_digest = digest_hex(co_sequent + "|" + co_class);
      if (co_trace) {
        for (auto& stp : run.reduction.trace)
          report.add("step/" + stp.rule, true, stp.after.to_string());
      }
      if (!run.ok) {
        report.add("correspondent", false, run.error);
        return finish(report, fmt());
      }
      report.add("side", true, run.side);
      report.add("system", true, run.reduction.system.to_string());
      report.add("guarded", true, fo_print(run.guarded));
      report.add("correspondent", true, run.result.text);
      if (run.result.used_del_instantiation)
        report.add("note", true, "used a ∂-sorted minimal instantiation");
      if (run.result.used_least_instantiation)
        report.add("note", true, "a variable without antecedent witnesses was "
                                 "instantiated with the least stable set");
      if (fmt() == ReportFormat::Human) std::cout << run.result.text << "\n";
      return finish(report, fmt());
    }
    if (*vf) {
      VarTable vars;
      auto seq = parse_sequent(vf_sequent, vars);
      auto run = correspond(seq, vf_class, SidePolicy::Auto, std::nullopt);
      RunReport report;
      report.command = "verify --sequent \"" + vf_sequent + "\" --class " + vf_class;
      report.input_digest = digest_hex(vf_sequent + "|" + vf_class);
      if (!run.ok) {
        report.add("correspondent", false, run.error);
        return finish(report, fmt());
      }
      std::vector<SortedFrame> frames;
      if (!vf_frames_dir.empty()) {
        std::vector<std::string> paths;
        for (auto& entry : std::filesystem::directory_iterator(vf_frames_dir))
          if (entry.path().extension() == ".frame") paths.push_back(entry.path().string());
        std::sort(paths.begin(), paths.end());
        for (auto& p : paths) frames.push_back(load_frame_file(p));
      } else {
        int n = vf_enumerate > 0 ? vf_enumerate : 50;
        frames = sample_lk_frames(vf_seed, static_cast<size_t>(n), 3);
      }
      auto vr = verify_correspondence(frames, seq, vf_class, run);
      report.add("correspondent", true, run.result.text);
      report.add("cross-check", vr.ok(),
                 std::to_string(vr.frames_checked) + " frames, " +
                     std::to_string(vr.divergences.size()) + " divergences, seed " +
                     std::to_string(vf_seed));
      return finish(report, fmt());
    }
    if (*st) {
      if (st_goldens) {
        std::cout << golden_actuals();
        return 0;
      }
      auto report = run_acceptance(st_fixtures, st_only);
      return finish(report, fmt());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
