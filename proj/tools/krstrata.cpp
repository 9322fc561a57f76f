// krstrata: enumerate Adm(mu), inspect elements, run the strata checks, draw
// Hasse diagrams and closures.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <iterator>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krstrata/admissible.hpp"
#include "krstrata/bruhat.hpp"
#include "krstrata/errors.hpp"
#include "krstrata/strata.hpp"
#include "krstrata/verify.hpp"
#include "krstrata/wire.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_budget(int g, int default_limit, std::optional<int> budget, const std::string& what) {
  const int limit = budget.value_or(default_limit);
  if (g > limit)
    throw krs::BudgetExceeded(what + " at genus " + std::to_string(g) + " exceeds the budget g <= " +
                              std::to_string(limit) + "; raise it with --budget or STRATA_BUDGET");
}

void print_elements(const std::vector<krs::AdmissibleElement>& xs, const std::string& format) {
  if (format == "csv") {
    std::cout << krs::csv_header() << "\n";
    for (const auto& x : xs) std::cout << krs::to_csv_row(x) << "\n";
    return;
  }
  krs::Json arr = krs::Json::array();
  for (const auto& x : xs) arr.push_back(krs::to_json(x));
  std::cout << arr.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kottwitz-Rapoport strata of the Siegel modular variety with Iwahori level"};
  app.require_subcommand(1);

  int g = 0;
  std::optional<int> prank;
  std::optional<int> budget;
  // one per subcommand: default_val writes the variable at definition time
  std::string enumerate_format, element_format, verify_format, hasse_format, closure_format;
  std::vector<int> fixed;
  std::vector<int> x0;
  std::vector<int> w;
  std::string check_list = "all";
  bool compare = false;

  auto genus_opt = [&](CLI::App* sub) {
    sub->add_option("--g", g, "genus")->required()->check(CLI::PositiveNumber);
  };
  auto budget_opt = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "largest genus allowed")->envname("STRATA_BUDGET")->check(CLI::PositiveNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "list Adm(mu) in canonical order");
  genus_opt(enumerate);
  enumerate->add_option("--prank", prank, "only this p-rank")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--fixed", fixed, "only this fixed-point set")->delimiter(',');
  enumerate->add_option("--format", enumerate_format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");
  budget_opt(enumerate);

  auto* element = app.add_subcommand("element", "inspect t^{x0} w");
  genus_opt(element);
  element->add_option("--x0", x0, "translation part, 2g integers")->required()->delimiter(',');
  element->add_option("--w", w, "Weyl part in one-line notation, 2g integers")->required()->delimiter(',');
  element->add_option("--format", element_format, "json")->check(CLI::IsMember({"json"}))->default_val("json");

  auto* verify = app.add_subcommand("verify", "compare the formulas with enumeration");
  genus_opt(verify);
  verify->add_option("--check", check_list, "comma-separated checks or 'all'")->default_val("all");
  verify->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_val("text");
  budget_opt(verify);

  auto* hasse = app.add_subcommand("hasse", "Bruhat covers inside Adm(mu)");
  genus_opt(hasse);
  hasse->add_option("--prank", prank, "only this p-rank")->check(CLI::NonNegativeNumber);
  hasse->add_option("--format", hasse_format, "dot or json")->check(CLI::IsMember({"dot", "json"}))->default_val("dot");
  budget_opt(hasse);

  auto* closure = app.add_subcommand("closure", "downward closure of a p-rank stratum");
  genus_opt(closure);
  closure->add_option("--prank", prank, "p-rank")->required()->check(CLI::NonNegativeNumber);
  closure->add_flag("--compare", compare, "compare with the predicted closure");
  closure->add_option("--format", closure_format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");
  budget_opt(closure);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (prank && *prank > g) throw UsageError("--prank must be between 0 and g");

    if (enumerate->parsed()) {
      check_budget(g, 5, budget, "enumerate");
      krs::AdmFilter filter;
      filter.prank = prank;
      if (enumerate->count("--fixed")) filter.fixed = fixed;
      print_elements(krs::enumerate_adm(g, filter), enumerate_format);
      return kOk;
    }

    if (element->parsed()) {
      if (static_cast<int>(x0.size()) != 2 * g || static_cast<int>(w.size()) != 2 * g)
        throw UsageError("--x0 and --w need 2g = " + std::to_string(2 * g) + " entries");
      const krs::SignedPermutation wp(w);
      krs::Json out;
      if (auto v = krs::admissibility_violation(x0, wp)) {
        out["admissible"] = false;
        krs::Json viol;
        viol["kind"] = krs::to_string(v->kind);
        viol["index"] = v->index;
        viol["message"] = v->message;
        out["violation"] = std::move(viol);
      } else {
        out["admissible"] = true;
        out["record"] = krs::to_json(krs::AdmissibleElement({krs::Cocharacter(x0), wp}));
      }
      std::cout << out.dump(2) << "\n";
      return kOk;
    }

    if (verify->parsed()) {
      const auto checks = krs::parse_checks(check_list);
      const auto reports = krs::verify(g, checks, {.budget = budget});
      if (verify_format == "json") std::cout << krs::to_json(g, reports).dump(2) << "\n";
      else std::cout << krs::to_table(reports);
      return krs::all_pass(reports) ? kOk : kFail;
    }

    if (hasse->parsed()) {
      check_budget(g, 4, budget, "hasse");
      krs::AdmFilter filter;
      filter.prank = prank;
      const auto diagram = krs::covers(krs::enumerate_adm(g, filter));
      if (hasse_format == "json") {
        krs::Json out;
        out["g"] = g;
        const auto body = krs::to_json(diagram);
        out["nodes"] = body["nodes"];
        out["edges"] = body["edges"];
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << krs::to_dot(diagram);
      }
      return kOk;
    }

    if (closure->parsed()) {
      check_budget(g, 4, budget, "closure");
      const auto computed = krs::closure_computed(g, *prank);
      if (!compare) {
        print_elements(computed, closure_format);
        return kOk;
      }
      const auto predicted = krs::closure_predicted(g, *prank);
      std::vector<krs::AdmissibleElement> tmp;
      std::set_difference(predicted.begin(), predicted.end(), computed.begin(), computed.end(), std::back_inserter(tmp));
      const auto only_predicted = krs::element_ids(tmp);
      tmp.clear();
      std::set_difference(computed.begin(), computed.end(), predicted.begin(), predicted.end(), std::back_inserter(tmp));
      const auto only_computed = krs::element_ids(tmp);
      const bool equal = only_predicted.empty() && only_computed.empty();
      if (closure_format == "csv") {
        print_elements(computed, closure_format);
        for (const auto& id : only_predicted) std::cerr << "predicted only: " << id << "\n";
        for (const auto& id : only_computed) std::cerr << "computed only: " << id << "\n";
      } else {
        krs::Json out;
        out["g"] = g;
        out["prank"] = *prank;
        out["equal"] = equal;
        krs::Json arr = krs::Json::array();
        for (const auto& x : computed) arr.push_back(krs::to_json(x));
        out["computed"] = std::move(arr);
        out["predicted_only"] = only_predicted;
        out["computed_only"] = only_computed;
        std::cout << out.dump(2) << "\n";
      }
      return equal ? kOk : kFail;
    }
  } catch (const krs::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
