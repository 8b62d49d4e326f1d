#include "cosserat/initial.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "cosserat/random.hpp"

namespace cosserat {
namespace {

void fill_smooth(ScalarField& f, SplitMix64& rng, double amplitude, int modes) {
    const Grid& g = f.grid;
    struct Mode {
        int kx, ky;
        double a, phase;
    };
    std::vector<Mode> list;
    for (int kx = 0; kx <= modes; ++kx)
        for (int ky = 0; ky <= modes; ++ky) {
            if (kx == 0 && ky == 0) continue;
            const double a = rng.uniform(-1.0, 1.0);
            const double phase = 2.0 * std::numbers::pi * rng.uniform01();
            list.push_back({kx, ky, a, phase});
        }
    if (list.empty()) return;
    const double scale = amplitude / static_cast<double>(list.size());
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) {
            double s = 0.0;
            for (const Mode& m : list)
                s += m.a * std::cos(2.0 * std::numbers::pi * (m.kx * g.x(i) / g.lx + m.ky * g.y(j) / g.ly) + m.phase);
            f(i, j) = scale * s;
        }
}

}  // namespace

FieldState random_smooth_state(const Grid& grid, std::uint64_t seed, double amplitude, int modes) {
    FieldState s(grid);
    SplitMix64 rng(seed);
    fill_smooth(s.u1, rng, amplitude, modes);
    fill_smooth(s.u2, rng, amplitude, modes);
    fill_smooth(s.theta, rng, amplitude, modes);
    return s;
}

FieldState random_smooth_state_with_rates(const Grid& grid, std::uint64_t seed, double amplitude, int modes) {
    FieldState s(grid);
    SplitMix64 rng(seed);
    fill_smooth(s.u1, rng, amplitude, modes);
    fill_smooth(s.u2, rng, amplitude, modes);
    fill_smooth(s.theta, rng, amplitude, modes);
    fill_smooth(s.v1, rng, amplitude, modes);
    fill_smooth(s.v2, rng, amplitude, modes);
    fill_smooth(s.omega, rng, amplitude, modes);
    return s;
}

}  // namespace cosserat
