#include "ldm/flow_fields.hpp"

#include <cmath>
#include <random>
#include <string>

#include "ldm/error.hpp"
#include "ldm/spectral.hpp"

namespace ldm {

namespace {

template <typename F>
SpectralField sample(const Grid& grid, F&& fn) {
  PhysicalField p(grid.n, 3);
  for (int i1 = 0; i1 < grid.n; ++i1) {
    for (int i2 = 0; i2 < grid.n; ++i2) {
      for (int i3 = 0; i3 < grid.n; ++i3) {
        const auto v = fn(p.coordinate(i1), p.coordinate(i2), p.coordinate(i3));
        for (int c = 0; c < 3; ++c) p.at(c, i1, i2, i3) = v[c];
      }
    }
  }
  return from_physical(p, grid);
}

}  // namespace

std::string to_string(FieldSpec::Kind kind) {
  switch (kind) {
    case FieldSpec::Kind::zero: return "zero";
    case FieldSpec::Kind::taylor_green: return "taylor_green";
    case FieldSpec::Kind::single_mode: return "single_mode";
    case FieldSpec::Kind::random_solenoidal: return "random_solenoidal";
    case FieldSpec::Kind::manufactured: return "manufactured";
  }
  return "unknown";
}

FieldSpec::Kind parse_field_kind(const std::string& name) {
  for (auto k : {FieldSpec::Kind::zero, FieldSpec::Kind::taylor_green, FieldSpec::Kind::single_mode,
                 FieldSpec::Kind::random_solenoidal, FieldSpec::Kind::manufactured}) {
    if (to_string(k) == name) return k;
  }
  throw ValidationError("unknown field kind '" + name +
                        "' (expected zero, taylor_green, single_mode, random_solenoidal, manufactured)");
}

SpectralField taylor_green(const Grid& grid, double amplitude) {
  return sample(grid, [amplitude](double x, double y, double z) {
    return std::array<double, 3>{amplitude * std::sin(x) * std::cos(y) * std::cos(z),
                                 -amplitude * std::cos(x) * std::sin(y) * std::cos(z), 0.0};
  });
}

SpectralField single_mode(const Grid& grid, std::array<int, 3> k, double amplitude) {
  const int lim = grid.n / 2;
  for (int j = 0; j < 3; ++j) {
    if (std::abs(k[j]) >= lim) throw ValidationError("single_mode: wavenumber outside the grid");
  }
  if (k[0] == 0 && k[1] == 0 && k[2] == 0) throw ValidationError("single_mode: k must be nonzero");

  const std::array<double, 3> kd{double(k[0]), double(k[1]), double(k[2])};
  auto cross = [](std::array<double, 3> a, std::array<double, 3> b) {
    return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                 a[0] * b[1] - a[1] * b[0]};
  };
  std::array<double, 3> e = cross(kd, {0.0, 0.0, 1.0});
  if (e[0] == 0.0 && e[1] == 0.0 && e[2] == 0.0) e = cross(kd, {0.0, 1.0, 0.0});
  const double norm = std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);

  SpectralField f(grid, 3);
  const std::array<cplx, 3> a{0.5 * amplitude * e[0] / norm, 0.5 * amplitude * e[1] / norm,
                              0.5 * amplitude * e[2] / norm};
  f.set_mode_pair(k[0], k[1], k[2], a);
  return f;
}

SpectralField random_solenoidal(const Grid& grid, double spectrum_slope, std::uint64_t seed,
                                double amplitude, int kmax) {
  if (kmax <= 0) kmax = grid.dealias_kmax();
  const int box = std::min(kmax, grid.dealias_kmax());
  const int n = grid.n;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SpectralField raw(grid, 3);
  for (auto& v : raw.data()) {
    const double re = normal(rng);
    const double im = normal(rng);
    v = cplx(re, im);
  }

  SpectralField f(grid, 3);
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      for (int i3 = 0; i3 < n; ++i3) {
        const int k1 = grid.wavenumber(i1), k2 = grid.wavenumber(i2), k3 = grid.wavenumber(i3);
        if (std::abs(k1) > box || std::abs(k2) > box || std::abs(k3) > box) continue;
        const double kk = std::sqrt(double(k1 * k1 + k2 * k2 + k3 * k3));
        if (kk < 1.0 || kk > kmax) continue;
        // |c|^2 ~ E(k) / k^2 so that the shell sum follows k^slope.
        const double scale = std::pow(kk, 0.5 * (spectrum_slope - 2.0));
        for (int c = 0; c < 3; ++c) {
          const cplx a = raw.mode(c, k1, k2, k3);
          const cplx b = std::conj(raw.mode(c, -k1, -k2, -k3));
          f.mode(c, k1, k2, k3) = 0.5 * scale * (a + b);
        }
      }
    }
  }
  f = leray_project(f);
  f.pin_constraints();
  const double norm = hs_norm(f, 0.0);
  if (norm > 0.0) f *= amplitude / norm;
  return f;
}

SpectralField make_field(const FieldSpec& spec, const Grid& grid) {
  switch (spec.kind) {
    case FieldSpec::Kind::zero: return SpectralField(grid, 3);
    case FieldSpec::Kind::taylor_green: return taylor_green(grid, spec.amplitude);
    case FieldSpec::Kind::single_mode: return single_mode(grid, spec.k, spec.amplitude);
    case FieldSpec::Kind::random_solenoidal:
      return random_solenoidal(grid, spec.spectrum_slope, spec.seed, spec.amplitude, spec.kmax);
    case FieldSpec::Kind::manufactured: {
      const double a = spec.amplitude;
      if (spec.expression == "abc") {
        return sample(grid, [a](double x, double y, double z) {
          return std::array<double, 3>{a * (std::sin(z) + std::cos(y)), a * (std::sin(x) + std::cos(z)),
                                       a * (std::sin(y) + std::cos(x))};
        });
      }
      if (spec.expression == "shear") {
        return sample(grid, [a](double, double y, double) {
          return std::array<double, 3>{a * std::sin(y), 0.0, 0.0};
        });
      }
      throw ValidationError("unknown manufactured expression '" + spec.expression +
                            "' (expected abc or shear)");
    }
  }
  throw ValidationError("unhandled field kind");
}

}  // namespace ldm
