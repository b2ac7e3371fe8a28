// Acceptance gate: one line per criterion, [PASS] or [FAIL], nonzero exit on
// any failure. Each criterion is independent and wrapped against exceptions
// so a crash in one shows up as a single failed line, not a dead binary.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shiftopt/dbar.hpp"
#include "shiftopt/experiments.hpp"
#include "shiftopt/jsr.hpp"
#include "shiftopt/lyapunov.hpp"
#include "shiftopt/perturb.hpp"
#include "shiftopt/reference.hpp"

using namespace shiftopt;

namespace {

int failures = 0;

void verdict(const char* tag, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << tag << ": " << detail << std::endl;
  if (!ok) ++failures;
}

void crashed(const char* tag, const std::exception& e) {
  verdict(tag, false, std::string("exception: ") + e.what());
}

double wall_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

Word random_word(Rng& r, int len) {
  std::string s;
  for (int i = 0; i < len; ++i) s.push_back(r.bit() ? '1' : '0');
  return Word::parse(s);
}

WeightFunction random_exact_tabular(Rng& r, int max_overrides) {
  auto pick = [&r]() {
    return Scalar(make_rat(static_cast<long long>(r.below(11)) - 5,
                           1 + static_cast<long long>(r.below(4))));
  };
  std::map<long long, std::array<Scalar, 2>> ov;
  int n_ov = static_cast<int>(r.below(static_cast<std::uint64_t>(max_overrides) + 1));
  for (int t = 0; t < n_ov; ++t) {
    long long idx = static_cast<long long>(r.below(17)) - 8;
    ov[idx] = {pick(), pick()};
  }
  return WeightFunction::tabular(pick(), pick(), std::move(ov));
}

// Exact sup-norm distance of two tabular weights: they differ from their
// defaults only at finitely many overrides, so probing the union of override
// indices plus one far-field index is exhaustive.
Rat sup_diff(const WeightFunction& p1, const WeightFunction& p2) {
  const auto& t1 = std::get<WeightFunction::Tabular>(p1.variant());
  const auto& t2 = std::get<WeightFunction::Tabular>(p2.variant());
  std::vector<long long> probe = {1000000};
  for (const auto& [i, v] : t1.overrides) probe.push_back(i);
  for (const auto& [i, v] : t2.overrides) probe.push_back(i);
  Rat best = 0;
  for (long long i : probe)
    for (int a = 0; a < 2; ++a) {
      Rat d = ::abs(p1.eval<Rat>(a, i) - p2.eval<Rat>(a, i));
      if (d > best) best = d;
    }
  return best;
}

WeightFunction agreement_weight(const Word& z) {
  std::array<std::array<Scalar, 2>, 2> table;
  table[0][0] = Scalar(make_rat(1, 1));
  table[0][1] = Scalar(make_rat(0, 1));
  table[1][0] = Scalar(make_rat(0, 1));
  table[1][1] = Scalar(make_rat(1, 1));
  return WeightFunction::orbit_induced(BiSequence::periodic(z), table);
}

// ----------------------------------------------------------------- criteria

void criterion_1() {
  const char* tag = "C1 rotation-coded pair keeps its spectral gap";
  try {
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    double t0 = wall_seconds();
    GurvitsReport rep = run_gurvits(GurvitsConfig{});
    double elapsed = wall_seconds() - t0;
    omp_set_num_threads(saved);
    bool greedy_free = rep.jsr_lower_estimate >= -0.01;
    double gap = rep.best_word_rate - rep.target_half_log_alpha;
    bool word_rate_in_band = gap >= -0.10 && gap <= 0.05;
    bool fast_enough = elapsed <= 120.0;
    std::ostringstream d;
    d.precision(6);
    d << "greedy=" << rep.jsr_lower_estimate << " best=" << rep.best_word_rate
      << " gap=" << gap << " (" << elapsed << "s single-threaded)";
    verdict(tag, greedy_free && word_rate_in_band && fast_enough, d.str());
  } catch (const std::exception& e) {
    crashed(tag, e);
  }
}

void criterion_2() {
  const char* tag = "C2 exponent equals one minus orbit distance";
  try {
    double t0 = wall_seconds();
    std::vector<Word> reps = primitive_necklaces(7);
    long long checked = 0, violations = 0;
    for (const Word& z : reps) {
      WeightFunction phi = agreement_weight(z);
      for (const Word& w : reps) {
        Rat lambda = lyapunov_periodic_exact(phi, w);
        Rat dist = dbar_periodic_exact(z, w);
        ++checked;
        if (lambda != 1 - dist) ++violations;
      }
    }
    double elapsed = wall_seconds() - t0;
    std::ostringstream d;
    d << checked << " orbit pairs up to period 7, " << violations << " violations ("
      << elapsed << "s)";
    verdict(tag, violations == 0 && elapsed <= 60.0, d.str());
  } catch (const std::exception& e) {
    crashed(tag, e);
  }
}

void criterion_3() {
  const char* tag = "C3 orbit distance matches joinings and coupling bounds";
  try {
    std::vector<Word> reps5 = primitive_necklaces(5);
    long long brute_bad = 0;
    for (const Word& u : reps5)
      for (const Word& v : reps5)
        if (dbar_periodic_exact(u, v) != reference::dbar_brute(u, v)) ++brute_bad;

    std::vector<Word> reps4 = primitive_necklaces(4);
    long long lp_bad = 0;
    for (const Word& u : reps4) {
      for (const Word& v : reps4) {
        MeasureSpec mu = MeasureSpec::periodic_orbit(u);
        MeasureSpec nu = MeasureSpec::periodic_orbit(v);
        Rat exact = dbar_periodic_exact(u, v);
        long long span = checked_lcm(u.size(), v.size());
        Rat prev = 0;
        bool ok = true;
        for (long long L = 1; L <= span; ++L) {
          Rat lo = scalar_as<Rat>(dbar_lp_lower(mu, nu, L));
          if (lo < prev || lo > exact) ok = false;
          prev = lo;
        }
        if (!ok || prev != exact) ++lp_bad;
      }
    }
    std::ostringstream d;
    d << reps5.size() * reps5.size() << " brute pairs (" << brute_bad << " bad), "
      << reps4.size() * reps4.size() << " coupling ladders (" << lp_bad << " bad)";
    verdict(tag, brute_bad == 0 && lp_bad == 0, d.str());
  } catch (const std::exception& e) {
    crashed(tag, e);
  }
}

void criterion_4() {
  const char* tag = "C4 rate bounds are Lipschitz and subadditive";
  try {
    Rng r(20260816);
    long long lipschitz_bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
      WeightFunction p1 = random_exact_tabular(r, 3);
      WeightFunction p2 = random_exact_tabular(r, 3);
      long long n = 2 + static_cast<long long>(r.below(11));  // up to 12
      Rat v1 = scalar_as<Rat>(jsr_upper(p1, n, 12).value);
      Rat v2 = scalar_as<Rat>(jsr_upper(p2, n, 12).value);
      if (::abs(v1 - v2) > sup_diff(p1, p2)) ++lipschitz_bad;
    }
    long long subadd_bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
      WeightFunction phi = random_exact_tabular(r, 2);
      Word w = random_word(r, 1 + static_cast<int>(r.below(4)));
      long long m1 = 1 + static_cast<long long>(r.below(4));
      long long m2 = 1 + static_cast<long long>(r.below(4));
      auto norm_of_power = [&](long long m) {
        return scalar_as<Rat>(log_norm(phi, w.repeated(m), 24).lower);
      };
      Rat a1 = norm_of_power(m1);
      Rat a2 = norm_of_power(m2);
      Rat a12 = norm_of_power(m1 + m2);
      if (a12 > a1 + a2) ++subadd_bad;
      // The exact periodic limit never exceeds any finite iterate average.
      Rat rate = exact_periodic_rate<Rat>(phi, w);
      if (rate * make_rat(m1 * w.size(), 1) > a1) ++subadd_bad;
    }
    std::ostringstream d;
    d << "100 weight pairs Lipschitz (" << lipschitz_bad << " bad), 100 power draws ("
      << subadd_bad << " bad)";
    verdict(tag, lipschitz_bad == 0 && subadd_bad == 0, d.str());
  } catch (const std::exception& e) {
    crashed(tag, e);
  }
}

void criterion_5() {
  const char* tag = "C5 marker perturbation obeys its window and growth bounds";
  try {
    Rng r(55555);
    long long draws = 0, window_bad = 0, structure_bad = 0;
    for (int p = 0; p < 20; ++p) {
      int zlen = 8 + static_cast<int>(r.below(9));
      Word zw = random_word(r, zlen);
      BiSequence z = BiSequence::periodic(zw);
      int N = 1 + static_cast<int>(r.below(4));
      long long s = static_cast<long long>(r.below(static_cast<std::uint64_t>(zlen)));
      Word omega = z.window(s, s + N - 1);  // guaranteed to occur in z
      WeightFunction phi = random_exact_tabular(r, 2);
      int depth = 3 + (p % 2);
      PerturbationPlan plan = build_plan(phi, omega, z, depth, 16);

      // Level-size chain and set containments for this plan.
      long long sum = 0;
      std::set<long long> all_b;
      for (int j = 1; j <= plan.depth; ++j) {
        long long nj = plan.n[static_cast<std::size_t>(j - 1)];
        if (j > 1 && make_rat(sum, 1) * make_rat(1ll << (j + 1), 1) >= make_rat(nj, 1))
          ++structure_bad;
        sum += nj;
        auto A = plan.set_A(j);
        auto B = plan.set_B(j);
        if (!std::includes(B.begin(), B.end(), A.begin(), A.end())) ++structure_bad;
        for (long long ell : B)
          if (!all_b.insert(ell).second) ++structure_bad;  // levels must not overlap
      }

      for (int t = 0; t < 50; ++t) {
        // Windows must be longer than the marker; lengths still reach 200.
        int len = N + 1 + static_cast<int>(r.below(static_cast<std::uint64_t>(200 - N)));
        Word x = random_word(r, len);
        long long k = static_cast<long long>(r.below(601)) - 300;
        UpperInequalityReport rep = check_upper_inequality(plan, x, k);
        ++draws;
        if (!rep.holds) ++window_bad;
      }
    }

    // Deep plan: positive margins with the tail of the slack halving per level.
    BiSequence z = BiSequence::periodic(Word::parse("0110100110010110"));
    WeightFunction base = WeightFunction::tabular(Scalar(make_rat(0, 1)), Scalar(make_rat(1, 1)));
    PerturbationPlan plan6 = build_plan(base, Word::parse("01"), z, 6, 16);
    long long growth_bad = 0;
    Rat prev_tail;
    for (int j = 2; j <= 6; ++j) {
      GrowthReport g = check_growth(plan6, base, Scalar(make_rat(1, 10)), j);
      Rat margin = scalar_as<Rat>(g.margin);
      long long N = g.order;
      Rat tail = g.slack - make_rat(2 * N * N * (N - 1), g.n_j);
      if (margin < 0) ++growth_bad;
      if (tail != make_rat(N * N, 1ll << j)) ++growth_bad;
      if (j > 2 && tail * 2 != prev_tail) ++growth_bad;
      prev_tail = tail;
    }

    std::ostringstream d;
    d << draws << " window draws (" << window_bad << " bad), 20 plans ("
      << structure_bad << " structure faults), depth-6 growth (" << growth_bad << " faults)";
    verdict(tag, window_bad == 0 && structure_bad == 0 && growth_bad == 0, d.str());
  } catch (const std::exception& e) {
    crashed(tag, e);
  }
}

void criterion_6() {
  const char* tag = "C6 block recursion beats its block-frequency measure";
  try {
    NomatherReport rep = run_nomather(NomatherConfig{});
    double f1 = rep.f1_hat.get_d();
    bool exponent_below = rep.mc_b.upper < 1.0 + f1 - 0.1;
    bool greedy_close = std::abs(rep.greedy_rate.get_d() - rep.target) <= 0.05;
    bool separated = rep.separation >= make_rat(1, 2);
    std::ostringstream d;
    d.precision(6);
    d << "mc upper=" << rep.mc_b.upper << " target=" << rep.target
      << " greedy=" << rep.greedy_rate.get_d()
      << " separation=" << rep.separation.get_d();
    verdict(tag, exponent_below && greedy_close && separated &&
                     rep.inequality_holds && rep.greedy_close,
            d.str());
  } catch (const std::exception& e) {
    crashed(tag, e);
  }
}

void criterion_7() {
  const char* tag = "C7 rotation coding stays far from short orbits";
  try {
    BiSequence st = BiSequence::sturmian("golden", 0);
    std::vector<Word> reps = primitive_necklaces(6);
    Rat threshold = make_rat(45, 100);
    Rat worst = 1;
    long long bad = 0, checked = 0;
    for (long long offset : {0ll, 1597ll, 4181ll}) {
      Word x = st.window(offset, offset + 9999);
      for (const Word& w : reps) {
        Rat dist = matching_distance(x, SubshiftSpec::periodic_orbit(w));
        ++checked;
        if (dist < worst) worst = dist;
        if (dist < threshold) ++bad;
      }
    }
    std::ostringstream d;
    d << checked << " window/orbit pairs, min distance " << worst.get_str() << " ~ "
      << worst.get_d();
    verdict(tag, bad == 0, d.str());
  } catch (const std::exception& e) {
    crashed(tag, e);
  }
}

struct CliRun {
  int code = -1;
  std::string output;
};

CliRun run_cli(const std::string& binary, const std::string& args, const std::string& outfile) {
  std::string cmd = "\"" + binary + "\" " + args + " > " + outfile + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  CliRun run;
  run.code = rc;
  std::ifstream in(outfile, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  run.output = buf.str();
  std::remove(outfile.c_str());
  return run;
}

void criterion_8(const std::string& binary) {
  const char* tag = "C8 command-line output is byte-stable across threads";
  if (binary.empty()) {
    verdict(tag, false, "no CLI binary path given (argv[1])");
    return;
  }
  try {
    std::vector<std::pair<std::string, std::string>> jobs = {
        {"selftest", "selftest --seed 1"},
        {"gurvits", "experiment gurvits --n 2000 --max-word-len 7 --min-total 2000 --seed 1"},
        {"tech-strictly", "experiment tech-strictly --z-word 01101 --test-periods 5 --seed 1"},
        {"nomather",
         "experiment nomather --j 2 --exponents 4,16,64,256 --greedy-n 20000 --mc-n 1000 "
         "--mc-samples 32 --seed 1"}};
    long long bad = 0;
    std::ostringstream d;
    for (const auto& [name, args] : jobs) {
      CliRun one = run_cli(binary, args + " --threads 1", "acceptance_cli_a.json");
      CliRun four = run_cli(binary, args + " --threads 4", "acceptance_cli_b.json");
      CliRun again = run_cli(binary, args + " --threads 4", "acceptance_cli_c.json");
      bool ok = one.code == 0 && four.code == 0 && again.code == 0 &&
                !one.output.empty() && one.output == four.output && four.output == again.output;
      if (!ok) ++bad;
      d << name << (ok ? " ok " : " MISMATCH ");
    }
    verdict(tag, bad == 0, d.str());
  } catch (const std::exception& e) {
    crashed(tag, e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::string binary = argc > 1 ? argv[1] : "";
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8(binary);
  if (failures == 0) {
    std::cout << "acceptance: all criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria failed" << std::endl;
  return 1;
}
