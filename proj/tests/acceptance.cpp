// Acceptance suite: reproduces the reference Monte Carlo study at desk
// scale (mc = 20,000, pbs = 1,000) and checks the analytic identities the
// library guarantees. Prints one PASS/FAIL line per criterion; the exit
// status is the number of failures.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oddsratio/bootstrap.hpp"
#include "oddsratio/cli.hpp"
#include "oddsratio/estimators.hpp"
#include "oddsratio/metrics.hpp"
#include "oddsratio/normal.hpp"
#include "oddsratio/random.hpp"
#include "oddsratio/report.hpp"
#include "oddsratio/simulation.hpp"

using namespace oddsratio;

namespace {

int g_failures = 0;

void report_line(bool ok, const std::string& label,
                 const std::string& detail) {
  std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", label.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) {
    ++g_failures;
  }
}

bool within(double value, double center, double tol) {
  return std::fabs(value - center) <= tol;
}

std::string num(double v) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.6g", v);
  return buffer;
}

std::string band(double value, double center, double tol) {
  return num(value) + " vs " + num(center) + " +/- " + num(tol);
}

const StudyDesign kProtective{200, 0.5, 0.075, 0.225};   // OR_true ~ 0.279
const StudyDesign kHarmful{200, 0.5, 0.2667, 0.1333};    // OR_true ~ 2.365
const StudyDesign kNull{200, 0.5, 0.5, 0.5};             // OR_true = 1

constexpr std::uint64_t kDeskMc = 20000;
constexpr std::uint32_t kDeskPbs = 1000;
constexpr std::uint64_t kSeed = 42;

const MethodSummary& summary(const SimulationReport& r, Method m) {
  for (const MethodSummary& s : r.summaries) {
    if (s.method == m) {
      return s;
    }
  }
  throw std::logic_error("method missing from report");
}

ContingencyTable random_table(RandomStream& stream) {
  auto cell = [&stream] { return 0.5 + 149.5 * stream.next_uniform(); };
  const double a = cell(), b = cell(), c = cell(), d = cell();
  return {a, b, c, d};
}

// --- criterion 1: exact analytics ----------------------------------------

void criterion_1() {
  const double or1 = true_or(kProtective);
  const double or2 = true_or(kHarmful);
  report_line(within(or1, 0.279, 0.0005) && within(or2, 2.365, 0.0005),
              "1a exact analytics: OR_true .279 / 2.365 to 3 decimals",
              num(or1) + ", " + num(or2));

  const double power1 = theoretical_power(kProtective, 0.05);
  report_line(within(power1, 0.811, 0.002),
              "1b exact analytics: theoretical power .811 +/- .002",
              num(power1));

  const double power2 = theoretical_power(kHarmful, 0.05);
  report_line(
      within(power2, 0.644, 0.002),
      "1c exact analytics: theoretical power .644 +/- .002",
      num(power2) +
          " (reference value .644 is only reachable from probabilities "
          "re-rounded to .267/.133, which give " +
          num(theoretical_power(StudyDesign{200, 0.5, 0.267, 0.133}, 0.05)) +
          "; the stated design gives " + num(power2) + ")");
}

// --- criteria 2 & 3: table reproduction at desk scale ---------------------

void criterion_2(const SimulationReport& r) {
  const MethodSummary& s1 = summary(r, Method::standard);
  const MethodSummary& s2 = summary(r, Method::pctl_boot);
  const MethodSummary& s3 = summary(r, Method::pctl_calc);
  const MethodSummary& s4 = summary(r, Method::barendregt);

  report_line(within(s1.mean_point, 0.309, 0.015),
              "2a protective: standard mean point .309 +/- .015",
              band(s1.mean_point, 0.309, 0.015));
  report_line(within(s3.mean_point, 0.279, 0.010),
              "2b protective: pctl-calc mean point .279 +/- .010",
              band(s3.mean_point, 0.279, 0.010));
  report_line(within(s1.one_minus_coverage, 0.040, 0.006),
              "2c protective: standard 1-coverage .040 +/- .006",
              band(s1.one_minus_coverage, 0.040, 0.006));
  report_line(within(s2.one_minus_coverage, 0.047, 0.006),
              "2d protective: pctl-boot 1-coverage .047 +/- .006",
              band(s2.one_minus_coverage, 0.047, 0.006));
  report_line(within(s3.one_minus_coverage, 0.046, 0.006),
              "2e protective: pctl-calc 1-coverage .046 +/- .006",
              band(s3.one_minus_coverage, 0.046, 0.006));
  report_line(within(s4.one_minus_coverage, 0.026, 0.015),
              "2f protective: barendregt 1-coverage .026 +/- .015",
              band(s4.one_minus_coverage, 0.026, 0.015));
  report_line(within(s1.empirical_power, 0.845, 0.015),
              "2g protective: standard power .845 +/- .015",
              band(s1.empirical_power, 0.845, 0.015));
  report_line(within(s2.empirical_power, 0.895, 0.015),
              "2h protective: pctl-boot power .895 +/- .015",
              band(s2.empirical_power, 0.895, 0.015));
  report_line(within(s3.empirical_power, 0.895, 0.015),
              "2i protective: pctl-calc power .895 +/- .015",
              band(s3.empirical_power, 0.895, 0.015));
}

void criterion_3(const SimulationReport& r) {
  const MethodSummary& s1 = summary(r, Method::standard);
  const MethodSummary& s2 = summary(r, Method::pctl_boot);
  const MethodSummary& s3 = summary(r, Method::pctl_calc);

  report_line(within(s1.mean_point, 2.544, 0.06),
              "3a harmful: standard mean point 2.544 +/- .06",
              band(s1.mean_point, 2.544, 0.06));
  report_line(within(s3.mean_point, 2.365, 0.04),
              "3b harmful: pctl-calc mean point 2.365 +/- .04",
              band(s3.mean_point, 2.365, 0.04));
  report_line(within(s1.one_minus_coverage, 0.045, 0.006),
              "3c harmful: standard 1-coverage .045 +/- .006",
              band(s1.one_minus_coverage, 0.045, 0.006));
  report_line(within(s2.one_minus_coverage, 0.051, 0.006),
              "3d harmful: pctl-boot 1-coverage .051 +/- .006",
              band(s2.one_minus_coverage, 0.051, 0.006));
  report_line(within(s3.one_minus_coverage, 0.049, 0.006),
              "3e harmful: pctl-calc 1-coverage .049 +/- .006",
              band(s3.one_minus_coverage, 0.049, 0.006));

  // the calc bounds must agree with the bootstrap's own means, not with
  // any printed reference
  const bool lower_ok =
      std::fabs(s3.mean_lower - s2.mean_lower) <= 0.02 * s2.mean_lower;
  const bool upper_ok =
      std::fabs(s3.mean_upper - s2.mean_upper) <= 0.02 * s2.mean_upper;
  report_line(lower_ok && upper_ok,
              "3f harmful: pctl-calc mean bounds within 2% of pctl-boot's",
              "(" + num(s3.mean_lower) + ", " + num(s3.mean_upper) +
                  ") vs (" + num(s2.mean_lower) + ", " + num(s2.mean_upper) +
                  ")");
}

// --- criterion 4: bootstrap/calc equivalence ------------------------------

void criterion_4() {
  const std::size_t pbs = 100000;
  const double z = normal_quantile(0.975);
  const double phi_median = 0.3989422804014327;  // pdf at 0
  const double phi_tail =
      std::exp(-z * z / 2.0) * 0.3989422804014327;  // pdf at +/- z
  const double root_b = std::sqrt(static_cast<double>(pbs));

  RandomStream tables(2718, 0);
  int comparisons = 0;
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const ContingencyTable t = random_table(tables);
    const double sigma = sigma_hat(t);
    const EstimateWithCI calc = percentile_calc_estimate(t, 0.05);
    RandomStream stream(2718, 1000 + static_cast<std::uint64_t>(i));
    const EstimateWithCI boot =
        percentile_bootstrap_estimate(t, 0.05, pbs, stream);

    // asymptotic SE of an empirical quantile of LN(mu*, sigma):
    // sqrt(q(1-q)/B) / f(x_q), with x_q the true quantile
    const double se_median =
        0.5 / root_b * sigma * calc.point / phi_median;
    const double se_lower = std::sqrt(0.025 * 0.975) / root_b * sigma *
                            calc.lower / phi_tail;
    const double se_upper = std::sqrt(0.025 * 0.975) / root_b * sigma *
                            calc.upper / phi_tail;

    failures += std::fabs(boot.point - calc.point) > 3 * se_median ? 1 : 0;
    failures += std::fabs(boot.lower - calc.lower) > 3 * se_lower ? 1 : 0;
    failures += std::fabs(boot.upper - calc.upper) > 3 * se_upper ? 1 : 0;
    comparisons += 3;
  }
  report_line(comparisons == 300 && failures <= 2,
              "4  bootstrap matches calc percentile within 3 quantile SEs "
              "at pbs=1e5 (<=2 of 300 exceedances)",
              std::to_string(failures) + " of 300 exceed");
}

// --- criterion 5: multiplicative shift identity ---------------------------

void criterion_5() {
  RandomStream tables(3141, 0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ContingencyTable t = random_table(tables);
    const double sigma = sigma_hat(t);
    const double shift = std::exp(-sigma * sigma / 2.0);
    const EstimateWithCI std_e = standard_estimate(t, 0.05);
    const EstimateWithCI calc_e = percentile_calc_estimate(t, 0.05);
    worst = std::max(worst, std::fabs(calc_e.lower / (std_e.lower * shift) -
                                      1.0));
    worst = std::max(worst, std::fabs(calc_e.upper / (std_e.upper * shift) -
                                      1.0));
  }
  report_line(worst <= 1e-12,
              "5  calc bounds = standard bounds x exp(-sigma^2/2), rel err "
              "<= 1e-12 over 1000 tables",
              "worst " + num(worst));
}

// --- criterion 6: bias ordering -------------------------------------------

void criterion_6(const SimulationReport& protective) {
  RandomStream tables(1618, 0);
  bool strict = true;
  for (int i = 0; i < 1000; ++i) {
    const ContingencyTable t = random_table(tables);
    strict = strict && (or_star(t) < crude_or(t));
  }
  report_line(strict, "6a or_star < crude_or strictly on 1000 tables", "");

  const double target = true_or(kProtective);
  const double bias_star =
      std::fabs(summary(protective, Method::pctl_calc).mean_point - target);
  const double bias_crude =
      std::fabs(summary(protective, Method::standard).mean_point - target);
  report_line(bias_star < bias_crude,
              "6b protective run: |mean(or_star) - OR_true| < "
              "|mean(crude_or) - OR_true|",
              num(bias_star) + " < " + num(bias_crude));
}

// --- criterion 7: determinism across thread counts ------------------------

void criterion_7() {
  SimulationSettings settings;
  settings.mc_count = 3000;
  settings.pbs_count = 500;
  settings.alpha = 0.05;
  settings.seed = 7;
  const std::string one =
      render_structured(run_simulation(kProtective, settings, 1));
  const std::string eight =
      render_structured(run_simulation(kProtective, settings, 8));
  report_line(one == eight,
              "7  structured output is byte-identical at 1 and 8 threads",
              one == eight ? "" : "outputs differ");
}

// --- criterion 8: accounting and the null design ---------------------------

bool counts_account(const MethodSummary& s) {
  const auto n = static_cast<double>(s.replication_count);
  const auto high = std::llround(s.miss_high * n);
  const auto low = std::llround(s.miss_low * n);
  const auto total = std::llround(s.one_minus_coverage * n);
  return high + low == total;
}

void criterion_8(const std::vector<const SimulationReport*>& reports) {
  bool accounts = true;
  for (const SimulationReport* r : reports) {
    for (const MethodSummary& s : r->summaries) {
      accounts = accounts && counts_account(s);
    }
  }
  report_line(accounts,
              "8a miss_high + miss_low = 1-coverage as exact counts, every "
              "report",
              "");

  SimulationSettings settings;
  settings.mc_count = kDeskMc;
  settings.pbs_count = kDeskPbs;
  settings.seed = kSeed;
  MethodSet methods;
  methods.insert(Method::standard).insert(Method::pctl_calc);
  settings.methods = methods;
  const SimulationReport null_run = run_simulation(kNull, settings);

  const MethodSummary& s1 = summary(null_run, Method::standard);
  const MethodSummary& s3 = summary(null_run, Method::pctl_calc);
  report_line(s1.empirical_power == s1.one_minus_coverage &&
                  s3.empirical_power == s3.one_minus_coverage &&
                  counts_account(s1) && counts_account(s3),
              "8b null design: empirical power equals 1-coverage exactly",
              "");
  report_line(within(s1.one_minus_coverage, 0.05, 0.006),
              "8c null design: standard 1-coverage .05 +/- .006",
              band(s1.one_minus_coverage, 0.05, 0.006));
  report_line(within(s3.one_minus_coverage, 0.05, 0.006),
              "8d null design: pctl-calc 1-coverage .05 +/- .006",
              band(s3.one_minus_coverage, 0.05, 0.006));
}

// --- criterion 9: numeric plumbing ----------------------------------------

double quantile_by_bisection(double p) {
  double lo = -40.0, hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (normal_cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void criterion_9() {
  double worst = 0.0;
  for (int k = 1; k <= 999; ++k) {
    const double p = k / 1000.0;
    worst = std::max(worst, std::fabs(normal_cdf(normal_quantile(p)) - p));
  }
  report_line(worst <= 1e-8,
              "9a cdf/quantile round-trip <= 1e-8 on the 999-point grid",
              "worst " + num(worst));

  const double q = normal_quantile(0.975);
  const double oracle = quantile_by_bisection(0.975);
  report_line(std::fabs(q - 1.959964) <= 1e-6 &&
                  std::fabs(q - oracle) <= 1e-9,
              "9b normal_quantile(0.975) = 1.959964 +/- 1e-6 against the "
              "bisection oracle",
              num(q));
}

}  // namespace

int main() {
  std::printf("odds-ratio estimation: acceptance suite (mc=%llu, pbs=%u, "
              "seed=%llu)\n\n",
              static_cast<unsigned long long>(kDeskMc), kDeskPbs,
              static_cast<unsigned long long>(kSeed));

  criterion_1();

  SimulationSettings desk;
  desk.mc_count = kDeskMc;
  desk.pbs_count = kDeskPbs;
  desk.alpha = 0.05;
  desk.seed = kSeed;

  const SimulationReport protective = run_simulation(kProtective, desk);
  const SimulationReport harmful = run_simulation(kHarmful, desk);

  criterion_2(protective);
  criterion_3(harmful);
  criterion_4();
  criterion_5();
  criterion_6(protective);
  criterion_7();
  criterion_8({&protective, &harmful});
  criterion_9();

  std::printf("\n%d criterion check(s) failed\n", g_failures);
  return g_failures;
}
