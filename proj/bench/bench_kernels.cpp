// Compares the OpenMP kernels against the serial reference implementations
// on matched inputs. Each row reports both wall times, the speedup, and
// whether the two paths produced the same answer. Not part of the test
// suite; build and run by hand when touching kernel code.

#include <omp.h>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>

#include "shiftopt/dbar.hpp"
#include "shiftopt/jsr.hpp"
#include "shiftopt/lyapunov.hpp"
#include "shiftopt/reference.hpp"

using namespace shiftopt;

namespace {

void row(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed
            << std::setprecision(4) << std::setw(10) << serial << "s" << std::setw(10)
            << parallel << "s" << std::setw(9) << std::setprecision(2)
            << (parallel > 0 ? serial / parallel : 0.0) << "x   "
            << (same ? "results match" : "RESULTS DIFFER") << "\n";
}

WeightFunction bench_weight() {
  std::map<long long, std::array<Scalar, 2>> ov;
  for (long long i = -6; i <= 6; ++i)
    ov[i] = {Scalar(make_rat(i, 7)), Scalar(make_rat(-i, 5))};
  return WeightFunction::tabular(Scalar(make_rat(1, 3)), Scalar(make_rat(5, 4)), std::move(ov));
}

}  // namespace

int main(int argc, char** argv) {
  long long scale = argc > 1 ? std::atoll(argv[1]) : 1;
  if (scale < 1) scale = 1;
  std::cout << "threads: " << omp_get_max_threads() << ", scale: " << scale << "\n\n";
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(11) << "serial"
            << std::setw(11) << "parallel" << std::setw(10) << "speedup" << "\n";

  WeightFunction phi = bench_weight();

  {
    long long n = 14 + (scale > 1 ? 2 : 0);
    double t0 = omp_get_wtime();
    JsrUpper ser = reference::jsr_upper(phi, n, 24);
    double t1 = omp_get_wtime();
    JsrUpper par = jsr_upper(phi, n, 24);
    double t2 = omp_get_wtime();
    bool same = *ser.value.exact == *par.value.exact &&
                ser.witness.to_string() == par.witness.to_string();
    row("word search (jsr upper)", t1 - t0, t2 - t1, same);
  }

  {
    MeasureSpec mu = MeasureSpec::bernoulli(Scalar(make_rat(2, 5)));
    long long n = 400, samples = 256 * scale;
    double t0 = omp_get_wtime();
    McResult ser = reference::lyapunov_mc(phi, mu, n, samples, 32, 17);
    double t1 = omp_get_wtime();
    McResult par = lyapunov_mc(phi, mu, n, samples, 32, 17);
    double t2 = omp_get_wtime();
    bool same = ser.mean == par.mean && ser.std_error == par.std_error;
    row("sampled exponent (mc)", t1 - t0, t2 - t1, same);
  }

  {
    // Long coprime periods force the full lcm span. Sizes stay under the
    // reference scan guard, so both paths compute the same exact value.
    Word u = Word::parse("01101001100101101001011001101001");     // 32
    Word v = Word::parse("0110100110010110100101100110100");      // 31
    Word uu = u.repeated(2);
    Word vv = v.repeated(2);
    double t0 = omp_get_wtime();
    Rat ser = reference::dbar_brute(uu, vv);
    double t1 = omp_get_wtime();
    Rat par = dbar_periodic_exact(uu, vv);
    double t2 = omp_get_wtime();
    row("orbit distance (dbar)", t1 - t0, t2 - t1, ser == par);
  }

  {
    MeasureSpec mu = MeasureSpec::markov(
        {{{Scalar(make_rat(1, 2)), Scalar(make_rat(1, 2))},
          {Scalar(make_rat(1, 4)), Scalar(make_rat(3, 4))}}},
        {Scalar(make_rat(1, 3)), Scalar(make_rat(2, 3))});
    long long n = 14;
    double t0 = omp_get_wtime();
    LyapunovUpper ser = reference::lyapunov_upper(phi, mu, n, 16);
    double t1 = omp_get_wtime();
    LyapunovUpper par = lyapunov_upper(phi, mu, n, 16);
    double t2 = omp_get_wtime();
    bool same = *ser.value.exact == *par.value.exact && ser.words == par.words;
    row("measure average (upper)", t1 - t0, t2 - t1, same);
  }

  return 0;
}
