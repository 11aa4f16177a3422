#include <cmath>
#include <limits>

#include "doctest.h"
#include "jratio/domain.hpp"
#include "jratio/error.hpp"
#include "property.hpp"

using namespace jratio;

namespace {

const Cx I{0.0, 1.0};

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("contains") {
  CHECK(contains(UpperHalfPlane{}, I));
  CHECK_FALSE(contains(UnitDisk{}, Cx{1.0, 0.0}));
  CHECK(contains(make_disk(2.0, 0.5), Cx{2.25, 0.0}));
  CHECK_FALSE(contains(UpperHalfPlane{}, Cx{3.0, 0.0}));
  CHECK(contains(UnitDisk{}, Cx{1.0 - 1e-15, 0.0}));
  CHECK_FALSE(contains(UnitDisk{}, Cx{std::numeric_limits<double>::quiet_NaN(), 0.0}));
  const PlanarDomain h = make_half_plane(Cx{-1.0, 0.0}, 0.5);  // Re z < -1/2
  CHECK(contains(h, Cx{-0.6, 10.0}));
  CHECK_FALSE(contains(h, Cx{-0.4, 0.0}));
}

TEST_CASE("boundary distance") {
  CHECK(boundary_distance(UpperHalfPlane{}, Cx{3.0, 2.0}) == 2.0);
  CHECK(boundary_distance(UnitDisk{}, Cx{0.5, 0.0}) == 0.5);
  CHECK(boundary_distance(make_disk(Cx{1.0, 1.0}, 2.0), Cx{1.0, 1.0}) == 2.0);
  CHECK(boundary_distance(make_half_plane(Cx{0.6, 0.8}, 1.0), Cx{3.0, 4.0}) == doctest::Approx(4.0));
  CHECK(code_of([] { boundary_distance(UnitDisk{}, Cx{2.0, 0.0}); }) == ErrorCode::PointOutsideDomain);
  CHECK(signed_boundary_distance(UnitDisk{}, Cx{2.0, 0.0}) == -1.0);
}

TEST_CASE("domain construction is validated") {
  CHECK(code_of([] { make_disk(0.0, 0.0); }) == ErrorCode::DomainError);
  CHECK(code_of([] { make_disk(0.0, -1.0); }) == ErrorCode::DomainError);
  CHECK(code_of([] { make_half_plane(Cx{1.0, 1.0}, 0.0); }) == ErrorCode::DomainError);
  CHECK(code_of([] { make_half_plane(I, std::numeric_limits<double>::infinity()); }) ==
        ErrorCode::DomainError);
  CHECK_NOTHROW(make_half_plane(Cx{0.6, 0.8 + 1e-13}, 0.0));
  CHECK(is_bounded(UnitDisk{}));
  CHECK_FALSE(is_bounded(UpperHalfPlane{}));
  CHECK(as_disk(UnitDisk{}).radius == 1.0);
  CHECK(as_half_plane(UpperHalfPlane{}).normal == I);
  CHECK(code_of([] { as_disk(UpperHalfPlane{}); }) == ErrorCode::DomainError);
}

TEST_CASE("j distance examples") {
  CHECK(j_distance(UpperHalfPlane{}, I, I) == 0.0);
  CHECK(j_distance(UpperHalfPlane{}, I, 2.0 * I) == doctest::Approx(0.6931471805599453).epsilon(1e-15));
  CHECK(j_distance(UnitDisk{}, 0.5, -0.5) == doctest::Approx(1.0986122886681097).epsilon(1e-15));
  // Frozen high-precision values for a generic disk and half-plane.
  CHECK(j_distance(make_disk(Cx{1.0, -2.0}, 3.0), Cx{0.5, -1.0}, Cx{2.5, -0.75}) ==
        doctest::Approx(1.0730487041968039).epsilon(1e-14));
  CHECK(j_distance(make_half_plane(Cx{0.6, 0.8}, -1.5), Cx{1.0, 2.0}, Cx{-3.0, 0.5}) ==
        doctest::Approx(3.7778060916382474).epsilon(1e-14));
  CHECK(code_of([] { j_distance(UnitDisk{}, 0.0, 1.5); }) == ErrorCode::PointOutsideDomain);
}

TEST_CASE("j distance keeps precision for tiny separations") {
  const double h = 1e-13;
  const double j = j_distance(UpperHalfPlane{}, I, I + h);
  CHECK(std::abs(j - (h - h * h / 2)) <= 1e-15 * h);
  CHECK(j_distance(UnitDisk{}, 0.0, 1e-300) == doctest::Approx(1e-300));
}

TEST_CASE("supplied separation overload agrees with the direct form") {
  const Cx z{0.3, -0.2}, w{-0.1, 0.45};
  CHECK(j_distance(UnitDisk{}, z, w, std::abs(z - w)) == j_distance(UnitDisk{}, z, w));
  CHECK(pseudo_hyperbolic_disk(z, w, std::abs(z - w)) == pseudo_hyperbolic_disk(z, w));
  CHECK(pseudo_hyperbolic_halfplane(z + I, w + I, std::abs(z - w)) ==
        pseudo_hyperbolic_halfplane(z + I, w + I));
}

TEST_CASE("pseudo-hyperbolic examples") {
  CHECK(pseudo_hyperbolic_disk(0.0, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(pseudo_hyperbolic_disk(Cx{0.1, 0.2}, Cx{0.1, 0.2}) == 0.0);
  CHECK(pseudo_hyperbolic_disk(0.5, -0.5) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(pseudo_hyperbolic_halfplane(I, I) == 0.0);
  CHECK(pseudo_hyperbolic_halfplane(I, 2.0 * I) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(pseudo_hyperbolic_halfplane(1.0 + I, -1.0 + I) == doctest::Approx(2.0 / std::sqrt(8.0)).epsilon(1e-15));
  CHECK(code_of([] { pseudo_hyperbolic_disk(0.0, 1.0); }) == ErrorCode::PointOutsideDomain);
  CHECK(code_of([] { pseudo_hyperbolic_halfplane(I, -I); }) == ErrorCode::PointOutsideDomain);
}

TEST_CASE("pseudo-hyperbolic distances match the quotient forms") {
  prop::for_all("disk quotient", 10000, 3, [](CounterRng& rng, std::string& why) {
    const auto [z, w] = sample_pair(UnitDisk{}, rng);
    const double direct = std::abs((z - w) / (1.0 - std::conj(w) * z));
    const double rho = pseudo_hyperbolic_disk(z, w);
    why = prop::describe(z, w, rho, direct);
    return rho >= 0.0 && rho < 1.0 && std::abs(rho - direct) <= 1e-12;
  });
  prop::for_all("half-plane quotient", 10000, 4, [](CounterRng& rng, std::string& why) {
    const auto [z, w] = sample_pair(UpperHalfPlane{}, rng);
    const double direct = std::abs((z - w) / (z - std::conj(w)));
    const double rho = pseudo_hyperbolic_halfplane(z, w);
    why = prop::describe(z, w, rho, direct);
    return rho >= 0.0 && rho < 1.0 && std::abs(rho - direct) <= 1e-12;
  });
}

TEST_CASE("j metric axioms on every domain kind") {
  const PlanarDomain domains[] = {UnitDisk{}, UpperHalfPlane{}, make_disk(Cx{-1.0, 2.0}, 0.75),
                                  make_half_plane(Cx{-0.8, 0.6}, 2.0)};
  for (const PlanarDomain& d : domains) {
    prop::for_all("metric axioms", 10000, 11, [&](CounterRng& rng, std::string& why) {
      const Cx x = sample_interior(d, rng), y = sample_interior(d, rng), z = sample_interior(d, rng);
      const double xy = j_distance(d, x, y), yx = j_distance(d, y, x);
      const double xz = j_distance(d, x, z), zy = j_distance(d, z, y);
      why = prop::describe(x, y, z, xy, xz, zy);
      return xy == yx && xy > 0.0 && j_distance(d, x, x) == 0.0 && xy <= xz + zy + 1e-12;
    });
  }
}

TEST_CASE("j grows as the domain shrinks") {
  const PlanarDomain small = UnitDisk{}, large = make_disk(0.0, 2.0);
  prop::for_all("nested disks", 10000, 5, [&](CounterRng& rng, std::string& why) {
    const auto [z, w] = sample_pair(small, rng);
    why = prop::describe(z, w);
    return j_distance(small, z, w) > j_distance(large, z, w);
  });
}

TEST_CASE("canonical tags are bit-identical to their generic forms") {
  const PlanarDomain disk = make_disk(0.0, 1.0), half = make_half_plane(I, 0.0);
  prop::for_all("unit disk tag", 1000, 6, [&](CounterRng& rng, std::string& why) {
    const auto [z, w] = sample_pair(UnitDisk{}, rng);
    why = prop::describe(z, w);
    return j_distance(UnitDisk{}, z, w) == j_distance(disk, z, w);
  });
  prop::for_all("half-plane tag", 1000, 7, [&](CounterRng& rng, std::string& why) {
    const auto [z, w] = sample_pair(UpperHalfPlane{}, rng);
    why = prop::describe(z, w);
    return j_distance(UpperHalfPlane{}, z, w) == j_distance(half, z, w);
  });
  CHECK(approx_equal(UnitDisk{}, disk, 0.0));
  CHECK(approx_equal(UpperHalfPlane{}, half, 0.0));
  CHECK_FALSE(approx_equal(UnitDisk{}, half, 1.0));
}

TEST_CASE("sampling respects the margin and the separation floor") {
  const PlanarDomain domains[] = {UnitDisk{}, UpperHalfPlane{}, make_disk(Cx{3.0, 0.0}, 0.01),
                                  make_half_plane(Cx{0.0, -1.0}, -4.0)};
  for (const PlanarDomain& d : domains) {
    prop::for_all("sample margin", 5000, 8, [&](CounterRng& rng, std::string& why) {
      const auto [z, w] = sample_pair(d, rng);
      why = prop::describe(z, w);
      return boundary_distance(d, z) >= kSampleMargin && boundary_distance(d, w) >= kSampleMargin &&
             std::abs(z - w) >= kPairSeparationFloor;
    });
  }
}

TEST_CASE("counter generator is a pure function of seed, stream and counter") {
  CounterRng a(42, 7), b(42, 7), c(42, 8);
  for (int k = 0; k < 100; ++k) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
  }
  CounterRng u(1, 1);
  for (int k = 0; k < 1000; ++k) {
    const double v = u.uniform();
    CHECK((v >= 0.0 && v < 1.0));
    CHECK(u.below(5) < 5);
  }
}
