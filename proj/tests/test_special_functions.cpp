#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "expbm/errors.hpp"
#include "expbm/special_functions.hpp"

using namespace expbm;

TEST_CASE("zeta at integers") {
  const double pi = std::numbers::pi;
  CHECK(zeta_int(2) == doctest::Approx(pi * pi / 6).epsilon(1e-15));
  CHECK(std::fabs(zeta_int(2) - pi * pi / 6) <= 1e-14);
  CHECK(std::fabs(zeta_int(4) - std::pow(pi, 4) / 90) <= 1e-15);
  CHECK(std::fabs(zeta_int(3) - 1.2020569031595942854) <= 1e-15);
  CHECK_THROWS_AS(zeta_int(1), DomainError);

  // 1 + 2^{-n} stops being representable in double past n = 52.
  const auto cache = make_zeta_cache(52);
  for (int n = 2; n < 52; ++n) {
    CHECK(cache(n) > 1.0);
    CHECK(cache(n + 1) <= cache(n));
  }
}

TEST_CASE("d_m table against independent Taylor coefficients") {
  const DmTable t = dm_coeffs(40);
  CHECK(t.max_index == 40);
  CHECK(t[0] == 1.0L);
  CHECK(std::fabs(static_cast<double>(t[1]) - kEulerGamma) <= 1e-16);
  CHECK(std::fabs(static_cast<double>(t[1]) - 0.5772156649015329) <= 1e-13);
  CHECK(std::fabs(static_cast<double>(t[2]) + 0.6558780715202538) <= 1e-13);
  // Frozen from an arbitrary-precision Taylor expansion of 1/Gamma(1+z).
  CHECK(static_cast<double>(t[3]) == doctest::Approx(-0.042002635034095235529).epsilon(1e-15));
  CHECK(static_cast<double>(t[10]) == doctest::Approx(0.00012805028238811618615).epsilon(1e-14));
  CHECK(static_cast<double>(t[20]) == doctest::Approx(-3.6968056186422057082e-12).epsilon(1e-14));
  CHECK(static_cast<double>(t[30]) == doctest::Approx(1.3373517304936931149e-22).epsilon(1e-14));
  CHECK(static_cast<double>(t[40]) == doctest::Approx(1.277085175140866204e-31).epsilon(1e-14));
  CHECK(dm_coeffs(0).coeffs.size() == 1);
}

TEST_CASE("d_m deep in the table keeps full relative precision") {
  const auto t = shared_dm_table(400);
  CHECK(t->max_index >= 400);
  CHECK(static_cast<double>((*t)[100]) == doctest::Approx(-9.2405e-108).epsilon(1e-4));
  CHECK(static_cast<double>((*t)[400] * 1e600L) == doctest::Approx(-1.5589e-17).epsilon(1e-4));
  // A smaller table is a prefix of the larger one.
  const auto small = dm_coeffs(50);
  for (int m = 0; m <= 50; ++m) CHECK(small[m] == (*t)[m]);
}

TEST_CASE("reciprocal gamma reconstruction") {
  const DmTable t = dm_coeffs(30);
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double z = -0.5 + 0.05 * i;
    long double s = 0.0L;
    for (int m = 30; m >= 0; --m) s = s * z + t[m];
    worst = std::max(worst, std::fabs(std::tgamma(1.0 + z) * static_cast<double>(s) - 1.0));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("decay majorant") {
  const auto t = shared_dm_table(400);
  for (int n = 2; n <= 400; ++n) CHECK(std::fabs((*t)[n]) <= dm_decay_bound(n));
  CHECK(dm_decay_bound(10) >= std::fabs((*t)[10]));
  for (int n = 3; n < 100; ++n) CHECK(dm_decay_bound(n + 1) < dm_decay_bound(n));
}

TEST_CASE("Hermite polynomials") {
  CHECK(hermite(0, 3.7) == 1.0);
  CHECK(hermite(1, 2.0) == 4.0);
  CHECK(hermite(3, 1.0) == doctest::Approx(-4.0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int i = 0; i < 10; ++i) {
    const double x = U(rng);
    const double explicit_h[] = {1.0, 2 * x, 4 * x * x - 2, 8 * x * x * x - 12 * x,
                                 16 * std::pow(x, 4) - 48 * x * x + 12, 32 * std::pow(x, 5) - 160 * std::pow(x, 3) + 120 * x};
    for (int m = 0; m <= 5; ++m) CHECK(hermite(m, x) == doctest::Approx(explicit_h[m]).epsilon(1e-12));
  }
}

TEST_CASE("erfc and erfcx") {
  CHECK(expbm::erfc(0.0) == 1.0);
  CHECK(expbm::erfc(-1.3) == doctest::Approx(2.0 - expbm::erfc(1.3)).epsilon(1e-15));
  CHECK(expbm::erfcx(1.0) == doctest::Approx(0.42758357615580700441).epsilon(1e-15));
  struct Ref {
    double x, erfc, erfcx;
  };
  const Ref refs[] = {{0.1, 0.8875370839817151016, 0.89645697996912663741},
                      {0.7, 0.32219880616258155772, 0.52593033734944095732},
                      {1.3, 0.06599205505934755415, 0.35764266908609032789},
                      {2.5, 0.00040695201744495893956, 0.21080636406114358065},
                      {4, 1.5417257900280018852e-8, 0.13699945762506138989},
                      {6, 2.1519736712498913117e-17, 0.092776567800538354389},
                      {10, 2.088487583762544757e-45, 0.056140992743822585858},
                      {26, 5.6631924088561428465e-296, 0.021683584850562906616}};
  for (const auto& r : refs) {
    CAPTURE(r.x);
    CHECK(std::fabs(expbm::erfc(r.x) / r.erfc - 1) <= 1e-14);
    CHECK(std::fabs(expbm::erfcx(r.x) / r.erfcx - 1) <= 1e-14);
  }
  for (int i = 0; i <= 50; ++i) {
    const double x = 0.1 * i;
    CHECK(std::fabs(expbm::erfc(x) + expbm::erfc(-x) - 2.0) <= 1e-14);
    CHECK(expbm::erfcx(x) * std::exp(-x * x) == doctest::Approx(expbm::erfc(x)).epsilon(1e-12));
    CHECK(std::fabs(expbm::erfc(x) - std::erfc(x)) <= 1e-15);
  }
  CHECK(expbm::erfc(30.0) == 0.0);
}

TEST_CASE("log Gamma at half-integers") {
  const double pi = std::numbers::pi;
  CHECK(lgamma_half(1) == doctest::Approx(0.5723649429247001).epsilon(1e-15));
  CHECK(lgamma_half(2) == 0.0);
  CHECK(lgamma_half(3) == doctest::Approx(-0.1207822376352452).epsilon(1e-14));
  CHECK_THROWS_AS(lgamma_half(0), DomainError);
  CHECK_THROWS_AS(lgamma_half(-3), DomainError);
  for (int n = 1; n <= 20; ++n) {
    double dfact = 1.0;
    for (int j = 2 * n - 1; j > 1; j -= 2) dfact *= j;
    const double expect = dfact * std::sqrt(pi) / std::pow(2.0, n);
    CHECK(std::exp(lgamma_half(2 * n + 1)) == doctest::Approx(expect).epsilon(1e-13));
  }
  for (int k = 1; k < 400; ++k) CHECK(lgamma_half(k) == doctest::Approx(std::lgamma(0.5 * k)).epsilon(1e-13));
}
