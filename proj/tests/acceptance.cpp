// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "equisum/constructions.hpp"
#include "equisum/feasibility.hpp"
#include "equisum/geometry.hpp"
#include "equisum/mixednorm.hpp"
#include "equisum/sweep.hpp"
#include "support/double_oracle.hpp"

namespace {

using namespace equisum;
using feasibility::VerdictKind;
using realnum::Rational;
using realnum::Sign;
using Pairs = std::vector<std::pair<long, long>>;

struct Outcome {
  bool pass;
  std::string detail;
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "equisum");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

Pairs pairs_of(const nlohmann::json& arr) {
  Pairs p;
  for (const auto& e : arr) p.emplace_back(e.at(0).get<long>(), e.at(1).get<long>());
  return p;
}

Pairs published_failures() {
  Pairs p{{28, 40}};
  for (long b = 39; b <= 44; ++b) p.emplace_back(29, b);
  for (long b = 40; b <= 47; ++b) p.emplace_back(30, b);
  return p;
}

std::string threads_flag() { return std::to_string(std::max(8u, std::thread::hardware_concurrency())); }

Outcome boundary_table() {
  const auto r = cli({"sweep", "--a-min", "2", "--a-max", "30", "--format", "json", "--threads", threads_flag()});
  const auto j = nlohmann::json::parse(r.out);
  const Pairs failing = pairs_of(j["failing_pairs"]);
  const std::size_t indeterminate = j["indeterminate_pairs"].size();
  const bool pass = r.code == 0 && failing == published_failures() && indeterminate == 0 && j["conclusive"].get<bool>();
  return {pass, std::to_string(failing.size()) + " failing pairs (expected 15, exact set match: " +
                    (failing == published_failures() ? "yes" : "no") + "), " + std::to_string(indeterminate) +
                    " indeterminate, " + std::to_string(j["records"].size()) + " pairs scanned"};
}

Outcome small_a_clean() {
  const auto r = cli({"sweep", "--a-min", "2", "--a-max", "27", "--format", "json", "--threads", threads_flag()});
  const auto j = nlohmann::json::parse(r.out);
  const std::size_t failing = j["failing_pairs"].size();
  return {r.code == 0 && failing == 0 && j["conclusive"].get<bool>(),
          std::to_string(failing) + " failing pairs for a in [2, 27]"};
}

Outcome lemma_certification() {
  long bad_cert = 0;
  for (long a = 2; a <= 40; ++a) {
    const auto cert = feasibility::lemma_certificate(a);
    if (!cert.holds().value_or(false)) ++bad_cert;
  }
  long checked = 0;
  long not_holding = 0;
  for (long a = 2; a <= 30; ++a) {
    for (long b = a * a + a; b <= a * a + a + 50; ++b) {
      ++checked;
      if (feasibility::check_inequality(feasibility::derive_parameters(a, b)).kind != VerdictKind::InequalityHolds) {
        ++not_holding;
      }
    }
  }
  return {bad_cert == 0 && not_holding == 0,
          std::to_string(39 - bad_cert) + "/39 lemma certificates, " + std::to_string(checked - not_holding) + "/" +
              std::to_string(checked) + " pairs beyond the threshold hold"};
}

Outcome construction_correctness() {
  long built = 0;
  long bad = 0;
  for (long a = 1; a <= 12; ++a) {
    for (long b = a; b <= 12; ++b) {
      const auto v = feasibility::classify(a, b);
      if (!v.constructible()) continue;
      const auto r = constructions::construct(a, b);
      ++built;
      if (r.point_set.size() != static_cast<std::size_t>(a + b + 1) ||
          !mixednorm::verify_equilateral(r.point_set, 1e-9).pass) {
        ++bad;
      }
    }
  }
  for (long a = 2; a <= 50; ++a) {
    ++built;
    if (!mixednorm::verify_equilateral(constructions::construct_prop2(a).point_set, 1e-9).pass) ++bad;
  }
  for (long b = 1; b <= 50; ++b) {
    ++built;
    if (!mixednorm::verify_equilateral(constructions::construct_prop1(b).point_set, 1e-9).pass) ++bad;
  }
  return {bad == 0, std::to_string(built - bad) + "/" + std::to_string(built) + " sets verified at rel_tol 1e-9"};
}

Outcome simplex_geometry() {
  double worst = 0.0;
  for (std::size_t m = 1; m <= 50; ++m) {
    for (double side : {1.0, 0.1835034190722739, 3.0}) {
      const auto v = geometry::regular_simplex(m, side, m + 1);
      const double radius = side * std::sqrt((m - 1.0) / (2.0 * m));
      geometry::Vector centroid(m + 1);
      for (std::size_t i = 0; i < m; ++i) {
        worst = std::max(worst, std::abs(geometry::norm(v[i]) - radius) / side);
        for (std::size_t k = 0; k <= m; ++k) centroid[k] += v[i][k] / static_cast<double>(m);
        for (std::size_t j = i + 1; j < m; ++j) {
          worst = std::max(worst, std::abs(geometry::distance(v[i], v[j]) - side) / side);
        }
      }
      for (std::size_t k = 0; k <= m; ++k) worst = std::max(worst, std::abs(centroid[k]) / side);
    }
  }
  std::ostringstream os;
  os << "worst relative error " << worst << " (tolerance 1e-12)";
  return {worst <= 1e-12, os.str()};
}

Outcome proof_steps() {
  long bad = 0;
  for (long c = 2; c <= 10000; ++c) {
    if (feasibility::beta_one_slack(c).sign != Sign::Positive) ++bad;
  }
  for (long n = 1; n <= 100; ++n) {
    if (feasibility::f_decrease(n).sign != Sign::Positive) ++bad;
  }
  for (long c = 2; c <= 100; ++c) {
    if (feasibility::ratio_increase(c).sign != Sign::Positive) ++bad;
  }
  long bound_checks = 0;
  for (long a = 2; a <= 100; ++a) {
    const Rational bound(a - 1, a + 1);
    for (long beta = 2; beta <= a - 1; ++beta) {
      ++bound_checks;
      const long alpha = a + 1 - beta;
      if (geometry::circumradius_sq(alpha - 1) + geometry::circumradius_sq(beta - 1) > bound) ++bad;
    }
  }
  return {bad == 0, std::to_string(bad) + " violations over 9999 beta=1 steps, 100 f steps, 99 ratio steps, " +
                        std::to_string(bound_checks) + " exact d^2 bounds"};
}

Outcome oracle_equivalence() {
  long pairs = 0;
  long disagreements = 0;
  long indeterminate = 0;
  for (long a = 2; a <= 30; ++a) {
    for (long b = a + 1; b <= a * a + a; ++b) {
      ++pairs;
      const auto v = feasibility::check_inequality(feasibility::derive_parameters(a, b));
      if (!v.conclusive()) {
        ++indeterminate;
        continue;
      }
      const auto sides = testing::inequality_sides(a, b);
      if ((v.kind == VerdictKind::InequalityHolds) != (sides.lhs <= sides.rhs)) ++disagreements;
    }
  }
  return {disagreements == 0 && indeterminate == 0,
          std::to_string(pairs) + " pairs, " + std::to_string(disagreements) + " disagreements, " +
              std::to_string(indeterminate) + " indeterminate"};
}

std::vector<std::string> pipeline() {
  std::vector<std::string> artifacts;
  for (const auto& [a, b] : Pairs{{5, 8}, {1, 9}, {11, 11}, {7, 3}, {12, 40}, {28, 41}}) {
    const auto built = cli({"construct", "--a", std::to_string(a), "--b", std::to_string(b)});
    artifacts.push_back(built.out);
    const auto set = mixednorm::point_set_from_json(built.out);
    artifacts.push_back(mixednorm::to_json(mixednorm::verify_equilateral(set)));
  }
  for (const char* format : {"csv", "json"}) {
    artifacts.push_back(
        cli({"sweep", "--a-min", "2", "--a-max", "30", "--format", format, "--threads", threads_flag()}).out);
  }
  return artifacts;
}

Outcome determinism() {
  const auto first = pipeline();
  const auto second = pipeline();
  std::size_t bytes = 0;
  for (const auto& a : first) bytes += a.size();
  return {first == second, std::to_string(first.size()) + " artifacts, " + std::to_string(bytes) +
                               " bytes, identical: " + (first == second ? "yes" : "no")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "boundary table for a in [2, 30]", boundary_table, 60.0},
      {"AC2", "no failures for a <= 27", small_a_clean, 60.0},
      {"AC3", "lemma certification", lemma_certification, 60.0},
      {"AC4", "construction correctness", construction_correctness, 60.0},
      {"AC5", "regular simplex geometry", simplex_geometry, 60.0},
      {"AC6", "proof-step inequalities", proof_steps, 120.0},
      {"AC7", "certified vs binary64 oracle", oracle_equivalence, 120.0},
      {"AC8", "pipeline determinism", determinism, 120.0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs <= c.budget_seconds;
    if (!pass) ++failed;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": " << o.detail << " ("
              << std::round(secs * 100.0) / 100.0 << " s)\n";
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed\n" : "acceptance criteria failed: ") ;
  if (failed) std::cout << failed << "\n";
  return failed;
}
