// Times the OpenMP kernels against their serial reference
// implementations (matmul, spectral assembly, batch map).

#include <chrono>
#include <cstdio>
#include <random>

#include "sdqm/parallel.hpp"
#include "sdqm/special.hpp"

namespace {

template <typename F>
double time_s(F&& f, int reps = 3) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best,
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 512;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);

  Eigen::MatrixXd a(n, n), b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a(i, j) = u(rng);
      b(i, j) = u(rng);
    }
  std::vector<double> fv(n);
  for (int i = 0; i < n; ++i) fv[i] = u(rng);

  std::printf("kernel                  n      serial [s]   openmp [s]   speedup\n");

  Eigen::MatrixXd r1, r2;
  const double ts1 = time_s([&] { r1 = sdqm::par::serial::matmul(a, b); });
  const double tp1 = time_s([&] { r2 = sdqm::par::matmul(a, b); });
  std::printf("matmul              %5d   %10.4f   %10.4f   %7.2fx   (max diff %.2e)\n", n, ts1,
              tp1, ts1 / tp1, (r1 - r2).cwiseAbs().maxCoeff());

  const double ts2 = time_s([&] { r1 = sdqm::par::serial::spectral_assemble(a, fv); });
  const double tp2 = time_s([&] { r2 = sdqm::par::spectral_assemble(a, fv); });
  std::printf("spectral_assemble   %5d   %10.4f   %10.4f   %7.2fx   (max diff %.2e)\n", n, ts2,
              tp2, ts2 / tp2, (r1 - r2).cwiseAbs().maxCoeff());

  std::vector<double> xs(200000);
  for (auto& x : xs) x = 0.5 + 49.5 * std::abs(u(rng));
  auto f = [](double x) { return sdqm::log_gamma({x, 0.3 * x}).real(); };
  std::vector<double> m1, m2;
  const double ts3 = time_s([&] { m1 = sdqm::par::serial::map(f, xs); });
  const double tp3 = time_s([&] { m2 = sdqm::par::map(f, xs); });
  double diff = 0;
  for (size_t i = 0; i < m1.size(); ++i) diff = std::max(diff, std::abs(m1[i] - m2[i]));
  std::printf("map(log_gamma)     %6zu   %10.4f   %10.4f   %7.2fx   (max diff %.2e)\n", xs.size(),
              ts3, tp3, ts3 / tp3, diff);
  return 0;
}
