// Copyright 2026 The bohrseq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bohrseq/approx.hpp"
#include "bohrseq/arcset.hpp"
#include "bohrseq/bohr.hpp"
#include "bohrseq/builder.hpp"
#include "bohrseq/errors.hpp"
#include "bohrseq/gap_cover.hpp"
#include "bohrseq/harness.hpp"
#include "bohrseq/io.hpp"

using namespace bohrseq;

namespace {

struct BohrArgs {
  std::string alphas;
  std::string eps;
  std::int64_t limit = 0;
};

void add_bohr_options(CLI::App* cmd, BohrArgs& a) {
  cmd->add_option("--alphas", a.alphas, "JSON file with the generator descriptors")->required();
  cmd->add_option("--eps", a.eps, "Bohr radius, e.g. 1/10")->required();
  cmd->add_option("--limit", a.limit, "Bohr limit N")->required();
}

BohrSet load_bohr(const BohrArgs& a, const Budgets& budgets) {
  GroupSpec g = group_from_json(read_json_file(a.alphas));
  return enumerate_bohr(g.generators, parse_rational(a.eps), a.limit, budgets);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong characterizing sequences for countable subgroups of R/Z"};
  app.require_subcommand(1);
  Budgets budgets;
  app.add_option("--precision-cap", budgets.precision_cap, "Largest precision level in bits");
  app.add_option("--dp-states", budgets.dp_states, "Containment DP state budget");
  app.add_option("--ball-points", budgets.ball_points, "Group ball point budget");
  app.add_option("--arcs", budgets.arcs, "Arc count budget");
  app.add_option("--probe-limit", budgets.probe_limit, "Largest N probed by find_N/find_M");

  BohrArgs enum_args, dec_args, arc_args;
  auto* enum_cmd = app.add_subcommand("enum", "List the members of H_{N,eps}");
  add_bohr_options(enum_cmd, enum_args);

  auto* dec_cmd = app.add_subcommand("decompose", "Certified GAP cover of H_{N,eps}");
  add_bohr_options(dec_cmd, dec_args);

  auto* arcs_cmd = app.add_subcommand("arcs", "Arc set { x : ||x H_{N,eps}|| <= cutoff }");
  add_bohr_options(arcs_cmd, arc_args);
  std::string cutoff = "1/6";
  arcs_cmd->add_option("--cutoff", cutoff, "Norm cutoff c, 0 < c < 1/2");

  auto* build_cmd = app.add_subcommand("build", "Build the first T stages of the sequence");
  std::string group_path, seq_out, report_out;
  int stages = 1;
  build_cmd->add_option("--group", group_path, "Group JSON")->required();
  build_cmd->add_option("--stages", stages, "Stage count T")->required();
  build_cmd->add_option("--out", seq_out, "CSV output (stage,t_index,n)")->required();
  build_cmd->add_option("--report", report_out, "JSON report output")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check summability or find witnesses");
  std::string seq_in, report_in, beta_path, mode = "member", r_text = "1", verify_out;
  std::string threshold = "1/6";
  verify_cmd->add_option("--seq", seq_in, "Sequence CSV from build")->required();
  verify_cmd->add_option("--report", report_in, "Report JSON from build")->required();
  verify_cmd->add_option("--beta", beta_path, "Beta descriptor JSON")->required();
  verify_cmd->add_option("--mode", mode, "member or nonmember")
      ->check(CLI::IsMember({"member", "nonmember"}));
  verify_cmd->add_option("--r", r_text, "Exponent r in (0, 1] (member mode)");
  verify_cmd->add_option("--out", verify_out, "CSV output")->required();
  verify_cmd->add_option("--threshold", threshold, "Witness threshold (nonmember mode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    if (*enum_cmd) {
      BohrSet h = load_bohr(enum_args, budgets);
      for (std::int64_t n : h.members) std::cout << n << '\n';
    } else if (*dec_cmd) {
      BohrSet h = load_bohr(dec_args, budgets);
      std::cout << cover_to_json(decompose_gap(h, budgets)).dump(2) << '\n';
    } else if (*arcs_cmd) {
      BohrSet h = load_bohr(arc_args, budgets);
      ArcSet s = solve_small_norm_set(h.members, parse_rational(cutoff), budgets);
      std::cout << arcs_to_json(s).dump(2) << '\n';
    } else if (*build_cmd) {
      GroupSpec g = group_from_json(read_json_file(group_path));
      StreamResult res = stream_sequence(g, stages, budgets);
      write_text_file(seq_out, sequence_csv(res.stages));
      write_text_file(report_out, report_to_json(res, g).dump(2) + "\n");
      if (!res.complete) {
        std::cerr << "error: " << res.error << '\n';
        return res.exit_code;
      }
    } else if (*verify_cmd) {
      Json report = read_json_file(report_in);
      std::vector<StageData> data = load_stages(seq_in, report);
      BetaSpec beta = beta_from_json(read_json_file(beta_path));
      VerificationReport rep;
      if (mode == "member") {
        if (!beta.has_combination) {
          throw InvalidInputError("member mode needs a declared 'combination' in the beta file");
        }
        GroupSpec g = group_from_json(report.at("group"));
        rep = verify_member(data, g.generators, beta.beta, beta.combination,
                            parse_rational(r_text), budgets);
        write_text_file(verify_out, member_csv(rep));
      } else {
        rep = verify_nonmember(data, beta.beta, parse_rational(threshold), budgets);
        write_text_file(verify_out, nonmember_csv(rep));
      }
      std::cout << verification_to_json(rep).dump(2) << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
