#pragma once

#include <string>
#include <vector>

#include "vizsos/json_io.hpp"
#include "vizsos/sosdp.hpp"

namespace vizsos {

struct PipelineOptions {
  int ell_start = 1;
  int ell_max = 4;
  // Artifacts are content-addressed by (params, order, ell, filter) under
  // this directory; empty disables persistence.
  std::string artifact_dir;
  SdpOptions sdp;
  std::vector<long> round_radicands = {2};
  long max_den = 64;
  double round_noise = 1e-3;
  uint64_t max_pairs = 20'000'000;
};

struct StageInfo {
  std::string name;
  double seconds = 0.0;
  std::string artifact;  // path when persisted
  std::string note;
};

struct PipelineRun {
  ClassParams params;
  std::vector<StageInfo> stages;
  int ell_final = 0;
  bool verified = false;
  // The ell increment added no standard monomials while the SDP stayed
  // infeasible: no certificate exists at any degree, which would disprove
  // the conjecture for this class.
  bool counterexample_alert = false;
  size_t groebner_size = 0;
  std::vector<int> dimensions;        // p per attempted ell
  std::vector<size_t> constraint_counts;
  SdpStatus last_status = SdpStatus::IterationLimit;
  int spectrum_kept = 0;
  double rounding_distance = 0.0;
  Certificate certificate;
};

PipelineRun run_pipeline(const ClassParams& params,
                         const PipelineOptions& options = {});

Json report(const PipelineRun& run);
std::string report_text(const PipelineRun& run);

// Content address of (params, order, ell, filter) used for artifact reuse.
std::string artifact_key(const ClassParams& params, const std::string& order,
                         int ell, const std::string& filter);

}  // namespace vizsos
