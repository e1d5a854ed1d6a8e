#include "vizsos/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <sstream>

namespace vizsos {

namespace {

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

std::string artifact_key(const ClassParams& params, const std::string& order,
                         int ell, const std::string& filter) {
  std::ostringstream in;
  in << params.to_string() << "|" << order << "|ell=" << ell << "|" << filter;
  std::ostringstream out;
  out << std::hex << std::hash<std::string>{}(in.str());
  return out.str();
}

PipelineRun run_pipeline(const ClassParams& params,
                         const PipelineOptions& options) {
  params.validate();
  PipelineRun run;
  run.params = params;

  const bool persist = !options.artifact_dir.empty();
  if (persist) std::filesystem::create_directories(options.artifact_dir);
  auto artifact_path = [&](const std::string& key, const std::string& stage) {
    return options.artifact_dir + "/" + key + "-" + stage + ".json";
  };

  VarRegistry reg(params);
  OrderPtr order = reg.default_order();
  const std::string order_name = "degrevlex";

  // Stage: ideal.
  auto t0 = std::chrono::steady_clock::now();
  GeneratorSet gens = build_I_viz(reg, order);
  Polynomial fviz = build_f_viz(reg, order);
  {
    StageInfo stage{"ideal", seconds_since(t0), "", ""};
    if (persist) {
      stage.artifact =
          artifact_path(artifact_key(params, order_name, 0, "ideal"), "ideal");
      if (!std::filesystem::exists(stage.artifact))
        write_json_file(stage.artifact, ideal_to_json(gens, reg));
    }
    run.stages.push_back(stage);
  }

  // Stage: Groebner basis (reused from disk when already computed).
  t0 = std::chrono::steady_clock::now();
  GroebnerBasis gb;
  {
    StageInfo stage{"groebner", 0.0, "", ""};
    std::string path;
    bool loaded = false;
    if (persist) {
      path = artifact_path(artifact_key(params, order_name, 0, "gb"), "gb");
      if (std::filesystem::exists(path)) {
        gb = groebner_from_json(read_json_file(path), reg);
        loaded = true;
        stage.note = "reused";
      }
    }
    if (!loaded) {
      BuchbergerOptions bo;
      bo.max_pairs = options.max_pairs;
      bo.source_hash = params.to_string();
      gb = buchberger(gens, order, bo);
      if (persist) write_json_file(path, groebner_to_json(gb, reg));
    }
    stage.seconds = seconds_since(t0);
    stage.artifact = path;
    run.stages.push_back(stage);
  }
  run.groebner_size = gb.size();

  // Stages: assemble / solve / extract / round / verify per ell.
  std::vector<Monomial> previous_monomials;
  for (int ell = options.ell_start; ell <= options.ell_max; ++ell) {
    run.ell_final = ell;
    t0 = std::chrono::steady_clock::now();
    SdpProblem prob = assemble(gb, fviz, ell);
    run.dimensions.push_back(prob.p);
    run.constraint_counts.push_back(prob.constraints.size());
    run.stages.push_back({"sdp-assemble-ell" + std::to_string(ell),
                          seconds_since(t0), "",
                          "p=" + std::to_string(prob.p) + " constraints=" +
                              std::to_string(prob.constraints.size())});

    t0 = std::chrono::steady_clock::now();
    SdpSolution sol = solve(prob, options.sdp);
    run.last_status = sol.status;
    {
      StageInfo stage{"sdp-solve-ell" + std::to_string(ell),
                      seconds_since(t0), "", to_string(sol.status)};
      if (persist) {
        stage.artifact = artifact_path(
            artifact_key(params, order_name, ell, "full"), "sol");
        write_json_file(stage.artifact, solution_to_json(sol, prob, reg));
      }
      run.stages.push_back(stage);
    }

    if (sol.status == SdpStatus::InfeasibleHeuristic) {
      std::vector<Monomial> next = standard_monomials(gb, ell + 1);
      if (next.size() == prob.v.size()) {
        // No new reduced monomials can appear: there is no certificate of
        // any degree for this class.
        run.counterexample_alert = true;
        return run;
      }
      continue;
    }
    if (sol.status == SdpStatus::IterationLimit) return run;

    // Feasible: extract, round, factor exactly, verify.
    t0 = std::chrono::steady_clock::now();
    NumericCertificate numeric = extract(sol, prob);
    run.spectrum_kept = static_cast<int>(numeric.S.rows());
    run.stages.push_back({"extract-ell" + std::to_string(ell),
                          seconds_since(t0), "",
                          "kept=" + std::to_string(numeric.S.rows())});

    t0 = std::chrono::steady_clock::now();
    RoundedGram rounded = round_gram(sol, options.round_radicands,
                                     options.max_den, options.round_noise);
    run.rounding_distance = rounded.max_distance;
    run.stages.push_back({"round-ell" + std::to_string(ell),
                          seconds_since(t0), "",
                          "max-distance=" +
                              std::to_string(rounded.max_distance)});

    t0 = std::chrono::steady_clock::now();
    StageInfo verify_stage{"verify-ell" + std::to_string(ell), 0, "", ""};
    try {
      Certificate cert = exact_certificate_from_gram(rounded, prob, params);
      VerifyOptions vo;
      vo.max_pairs = options.max_pairs;
      VerifyResult vr = verify_exact(cert, vo);
      verify_stage.seconds = seconds_since(t0);
      if (vr.ok) {
        run.verified = true;
        run.certificate = cert;
        verify_stage.note = "verified";
        if (persist) {
          verify_stage.artifact = artifact_path(
              artifact_key(params, order_name, ell, "cert"), "cert");
          write_json_file(verify_stage.artifact,
                          certificate_to_json(cert, reg));
        }
        run.stages.push_back(verify_stage);
        return run;
      }
      verify_stage.note = "residual nonzero";
    } catch (const Error& e) {
      verify_stage.seconds = seconds_since(t0);
      verify_stage.note = e.what();
    }
    run.stages.push_back(verify_stage);
    return run;
  }
  return run;
}

Json report(const PipelineRun& run) {
  Json j;
  j["params"] = to_json(run.params);
  j["groebner_size"] = run.groebner_size;
  j["ell_final"] = run.ell_final;
  j["verified"] = run.verified;
  j["counterexample_alert"] = run.counterexample_alert;
  j["dimensions"] = run.dimensions;
  j["constraint_counts"] = run.constraint_counts;
  j["last_status"] = to_string(run.last_status);
  j["spectrum_kept"] = run.spectrum_kept;
  j["rounding_distance"] = run.rounding_distance;
  Json stages = Json::array();
  for (const auto& s : run.stages)
    stages.push_back(Json{{"name", s.name},
                          {"seconds", s.seconds},
                          {"artifact", s.artifact},
                          {"note", s.note}});
  j["stages"] = stages;
  if (run.verified) {
    VarRegistry reg(run.params);
    j["certificate"] = certificate_to_json(run.certificate, reg);
  }
  return j;
}

std::string report_text(const PipelineRun& run) {
  std::ostringstream out;
  out << "pipeline " << run.params.to_string() << "\n";
  out << "  groebner basis size: " << run.groebner_size << "\n";
  for (size_t i = 0; i < run.dimensions.size(); ++i)
    out << "  ell attempt " << i << ": p=" << run.dimensions[i]
        << " constraints=" << run.constraint_counts[i] << "\n";
  out << "  final status: " << to_string(run.last_status) << "\n";
  out << "  verified: " << (run.verified ? "yes" : "no") << "\n";
  if (run.counterexample_alert)
    out << "  ALERT: no new reduced monomials and SDP infeasible; this "
           "class admits no certificate of any degree\n";
  for (const auto& s : run.stages) {
    out << "  [" << s.name << "] " << s.seconds << "s";
    if (!s.note.empty()) out << " (" << s.note << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace vizsos
