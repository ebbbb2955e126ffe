#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpi/errors.hpp"
#include "qpi/identities.hpp"
#include "qpi/limits.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> selected_ids(const std::vector<std::string>& args) {
  if (args.size() == 1 && args[0] == "all") return {};
  for (const auto& id : args) qpi::find_record(id);
  return args;
}

int cmd_list(const std::string& prefix, bool json) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : qpi::catalog()) {
    if (r.id.rfind(prefix, 0) != 0) continue;
    const std::string target = r.target ? r.target->display : "none";
    if (json) {
      nlohmann::ordered_json o;
      o["id"] = r.id;
      o["kind"] = qpi::to_string(r.kind);
      o["lattice"] = r.lattice;
      o["params"] = qpi::domain_summary(r);
      o["classical_target"] = r.target ? nlohmann::ordered_json(target) : nullptr;
      o["limit_scale"] = r.target ? nlohmann::ordered_json(r.limit_scale.str()) : nullptr;
      arr.push_back(o);
    } else {
      std::cout << std::left << std::setw(14) << r.id << std::setw(16) << qpi::to_string(r.kind)
                << "L=" << std::setw(4) << r.lattice << target << "\n";
    }
  }
  if (json) std::cout << arr.dump() << "\n";
  return kExitPass;
}

int cmd_verify(const std::vector<std::string>& args, const qpi::VerifyConfig& cfg, bool json,
               bool timing) {
  const auto reports = qpi::verify_records(selected_ids(args), cfg);
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (json) {
      std::cout << r.to_json(timing).dump() << "\n";
    } else {
      std::cout << r.to_text() << "\n";
    }
  }
  if (!json) {
    long passed = 0;
    for (const auto& r : reports) passed += r.passed() ? 1 : 0;
    std::cout << passed << "/" << reports.size() << " passed\n";
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_limit(const std::vector<std::string>& args, bool json, bool timing) {
  std::vector<const qpi::IdentityRecord*> recs;
  if (args.size() == 1 && args[0] == "all") {
    for (const auto& r : qpi::catalog()) {
      if (r.target) recs.push_back(&r);
    }
  } else {
    for (const auto& id : args) {
      const auto& r = qpi::find_record(id);
      if (!r.target) throw qpi::UsageError(id + " has no classical target");
      recs.push_back(&r);
    }
  }
  bool ok = true;
  for (const auto* r : recs) {
    const auto rep = qpi::check_limit(*r, qpi::GridSpec{});
    ok = ok && rep.passed();
    if (json) {
      std::cout << rep.to_json(timing).dump() << "\n";
    } else {
      std::cout << rep.to_text() << "\n";
    }
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-series identity verification"};
  app.require_subcommand(1);

  std::string prefix;
  bool json = false;
  bool timing = false;
  std::vector<std::string> ids;
  std::string p_text = "0.9";
  qpi::VerifyConfig cfg;

  auto* list = app.add_subcommand("list", "List catalogued identities");
  list->add_option("prefix", prefix, "Only ids starting with this prefix");
  list->add_flag("--json", json, "JSON array output");

  auto* verify = app.add_subcommand("verify", "Verify identities (ids or 'all')");
  verify->add_option("ids", ids, "Identity ids, or 'all'")->required();
  verify->add_option("--p", p_text, "Lattice root, exact decimal in (0,1)");
  verify->add_option("--digits", cfg.digits, "Working precision in digits")
      ->check(CLI::Range(10, 100000));
  verify->add_option("--n-max", cfg.n_max, "Largest n for terminating records")
      ->check(CLI::Range(0L, 200L));
  verify->add_option("--seed", cfg.seed, "Seed for random parameter points");
  verify->add_option("--trials", cfg.trials, "Random points per terminating record")
      ->check(CLI::Range(1, 1000));
  verify->add_option("--max-terms", cfg.max_terms, "Series term cap")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "One JSON report per line");
  verify->add_flag("--timing", timing, "Include wall time in JSON reports");

  auto* limit = app.add_subcommand("limit", "Extrapolate q -> 1 against classical constants");
  limit->add_option("ids", ids, "Identity ids, or 'all'")->required();
  limit->add_flag("--json", json, "One JSON report per line");
  limit->add_flag("--timing", timing, "Include wall time in JSON reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*list) return cmd_list(prefix, json);
    if (*verify) {
      try {
        cfg.p = qpi::ExactScalar::parse(p_text);
      } catch (const qpi::DomainError& e) {
        throw qpi::UsageError(std::string("--p: ") + e.what());
      }
      if (!(cfg.p > qpi::ExactScalar(0)) || !(cfg.p < qpi::ExactScalar(1))) {
        throw qpi::UsageError("--p must lie strictly between 0 and 1");
      }
      return cmd_verify(ids, cfg, json, timing);
    }
    return cmd_limit(ids, json, timing);
  } catch (const qpi::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
