// qhsp: command line front end for the quaternionic hyperbolic toolkit.
//
// Subcommands: verify, classify, cohomology, flex, bend, hull. All output is
// deterministic given --seed/--tol/--arith; --json switches to machine
// output. Errors print a machine-readable object on stderr and exit nonzero.

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <random>

#include "qhsp/cohomology.hpp"
#include "qhsp/json_io.hpp"
#include "qhsp/verify.hpp"

using namespace qhsp;

namespace {

Json report_to_json(const Report& rep) {
  Json checks = Json::array();
  for (const CheckResult& c : rep.checks) {
    Json j{{"id", c.id},
           {"status", c.pass ? "pass" : "fail"},
           {"measured", c.measured},
           {"tolerance", c.bound}};
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(j);
  }
  return Json{{"suite", rep.suite},
              {"config",
               {{"arith", rep.config.arith},
                {"tol", rep.config.tol},
                {"seed", rep.config.seed}}},
              {"checks", checks},
              {"pass", rep.all_pass()}};
}

void print_report(const Report& rep, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(rep).dump(2) << "\n";
    return;
  }
  std::cout << "suite " << rep.suite << " (tol " << rep.config.tol << ", seed "
            << rep.config.seed << ", arith " << rep.config.arith << ")\n";
  for (const CheckResult& c : rep.checks) {
    std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << std::left << std::setw(34)
              << c.id << " measured " << std::setprecision(6) << c.measured << "  bound "
              << c.bound;
    if (!c.note.empty()) std::cout << "  (" << c.note << ")";
    std::cout << "\n";
  }
  std::cout << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
}

int finish(const Report& rep, bool as_json) {
  print_report(rep, as_json);
  return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for quaternionic hyperbolic plane geometry"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  bool as_json = false;
  VerifyConfig cfg;
  std::string config_file;
  app.add_flag("--json", as_json, "machine readable output");
  app.add_option("--tol", cfg.tol, "numeric tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--arith", cfg.arith, "arithmetic backend: float | exact")
      ->check(CLI::IsMember({"float", "exact"}))
      ->capture_default_str();
  app.add_option("--config", config_file, "JSON config file (flags win)");

  // verify
  std::string suite = "all";
  CLI::App* cmd_verify = app.add_subcommand("verify", "run a named invariant suite");
  cmd_verify->add_option("suite", suite, "suite name")->required();

  // classify
  std::string rep_file;
  CLI::App* cmd_classify =
      app.add_subcommand("classify", "classify generator images of a representation");
  cmd_classify->add_option("rep", rep_file, "surface rep JSON")->required();

  // cohomology
  std::string coh_rep, block = "all";
  CLI::App* cmd_coh = app.add_subcommand("cohomology", "twisted cohomology dimensions");
  cmd_coh->add_option("rep", coh_rep, "surface rep JSON")->required();
  cmd_coh->add_option("--block", block, "all | sp1 | sp11 | h2 | w | trivial")
      ->capture_default_str();

  // flex
  std::string flex_rep;
  CLI::App* cmd_flex = app.add_subcommand("flex", "flexibility construction");
  cmd_flex->add_option("rep", flex_rep, "surface rep JSON")->required();

  // bend
  std::string bend_rep, bend_lam, bend_out;
  CLI::App* cmd_bend = app.add_subcommand("bend", "bend a representation along a lamination");
  cmd_bend->add_option("rep", bend_rep, "surface rep JSON")->required();
  cmd_bend->add_option("lamination", bend_lam, "lamination JSON")->required();
  cmd_bend->add_option("out", bend_out, "output file for the bent rep")->required();

  // hull
  std::string hull_rep;
  CLI::App* cmd_hull = app.add_subcommand("hull", "Zariski closure surrogate report");
  cmd_hull->add_option("rep", hull_rep, "surface rep JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_file.empty()) {
      Json j = load_json_file(config_file);
      VerifyConfig file_cfg;
      file_cfg.tol = j.value("tol", file_cfg.tol);
      file_cfg.seed = j.value("seed", file_cfg.seed);
      file_cfg.arith = j.value("arith", file_cfg.arith);
      // flags win over the config file
      if (app.count("--tol") == 0) cfg.tol = file_cfg.tol;
      if (app.count("--seed") == 0) cfg.seed = file_cfg.seed;
      if (app.count("--arith") == 0) cfg.arith = file_cfg.arith;
    }

    if (cmd_verify->parsed()) return finish(run_suite(suite, cfg), as_json);

    if (cmd_classify->parsed()) {
      Json j = load_json_file(rep_file);
      Report rep{"classify", {}, cfg};
      if (j.contains("matrix")) {
        IsometryClass cls = classify(qmat3_from_json(j["matrix"]));
        rep.checks.push_back({"matrix", true, std::abs(cls.top_eigenvalue), 0,
                              to_string(cls.kind)});
      } else {
        SurfaceRep sr = surface_rep_from_json(j);
        for (int g = 0; g < sr.pres.num_generators(); ++g) {
          IsometryClass cls = classify(sr.images[g]);
          rep.checks.push_back({sr.pres.generator_name(g), true,
                                std::abs(cls.top_eigenvalue), 0, to_string(cls.kind)});
        }
      }
      return finish(rep, as_json);
    }

    if (cmd_coh->parsed()) {
      SurfaceRep sr = surface_rep_from_json(load_json_file(coh_rep));
      GroupRep grep = group_rep(sr);
      Block b = block_from_name(block);
      CoefficientModule mod = block_module(grep, b);
      CochainComplex cc = fox_complex(grep.num_gens, grep.relator, mod);
      CohomologyDims dims = cohomology_dims(cc);

      Json out{{"block", block}, {"h0", dims.h0}, {"h1", dims.h1}, {"h2", dims.h2}};
      out["cup_gram"] = nullptr;
      if (b == Block::Trivial) {
        auto basis = h1_basis(cc);
        Json gram = Json::array();
        for (const auto& bi : basis) {
          Json row = Json::array();
          for (const auto& bj : basis)
            row.push_back(cup_pair_scalar(grep.relator, mod, bi, bj));
          gram.push_back(row);
        }
        out["cup_gram"] = gram;
      } else if (b == Block::W) {
        CupContext ctx(grep);
        auto basis = h1_basis(cc);
        std::vector<Cocycle> emb;
        for (const auto& c : basis) emb.push_back(embed_cocycle(Block::W, c));
        Json gram = Json::array();
        for (size_t i = 0; i < emb.size(); ++i) {
          Json row = Json::array();
          for (size_t j2 = 0; j2 < emb.size(); ++j2)
            row.push_back(ctx.cup_pair(emb[i], emb[j2]).h0_coords(3));
          gram.push_back(row);
        }
        out["cup_gram"] = gram;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (cmd_flex->parsed()) {
      SurfaceRep sr = surface_rep_from_json(load_json_file(flex_rep));
      GroupRep grep = group_rep(sr);
      CupContext ctx(grep);
      CoefficientModule h2m = block_module(grep, Block::H2);
      auto basis = h1_basis(fox_complex(grep.num_gens, grep.relator, h2m));
      if (basis.empty()) throw DomainError("H^1 of the H^2 block is trivial");

      std::mt19937_64 rng(cfg.seed);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      Cocycle blockc = basis[0];
      blockc.values = u(rng) * basis[0].values;
      for (size_t i = 1; i < basis.size(); ++i) blockc.values += u(rng) * basis[i].values;
      FlexResult res = flex_deform(embed_cocycle(Block::H2, blockc), ctx);

      double cupnorm = ctx.cup_square(res.x).h0_coords.norm();
      double h2norm = 0;
      for (int g = 0; g < grep.num_gens; ++g)
        h2norm += res.x.value(g).segment(kH2Begin, 8).squaredNorm();
      Report rep{"flex", {}, cfg};
      rep.checks.push_back({"cup_square_norm", cupnorm < 1e-8, cupnorm, 1e-8, ""});
      rep.checks.push_back(
          {"h2_component_nonzero", std::sqrt(h2norm) > 1e-8, std::sqrt(h2norm), 1e-8, ""});
      return finish(rep, as_json);
    }

    if (cmd_bend->parsed()) {
      SurfaceRep sr = surface_rep_from_json(load_json_file(bend_rep));
      MeasuredLamination lam =
          lamination_from_json(load_json_file(bend_lam), sr.pres.genus);
      SurfaceRep bent = bend_lamination_rep(sr, lam);
      save_json_file(bend_out, surface_rep_to_json(bent));
      Json out{{"written", bend_out},
               {"relator_residual", relator_residual(bent)},
               {"hull", hull_report_to_json(hull_classify(bent))}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (cmd_hull->parsed()) {
      SurfaceRep sr = surface_rep_from_json(load_json_file(hull_rep));
      std::cout << hull_report_to_json(hull_classify(sr)).dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    Json err{{"error", {{"code", e.code()}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json err{{"error", {{"code", "Internal"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 3;
  }
  return 0;
}
