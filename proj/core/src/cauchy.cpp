#include "symdom/cauchy.hpp"

#include <cmath>
#include <numbers>

namespace symdom {

CPolynomial torus_taylor(const HoloFn& f, const Vec& center, const std::vector<double>& radii,
                         const std::vector<int>& nodes,
                         const std::function<bool(const MultiIndex&)>& keep)
{
    const int d = static_cast<int>(center.size());
    if (static_cast<int>(radii.size()) != d || static_cast<int>(nodes.size()) != d)
        throw std::invalid_argument("torus_taylor: radii/nodes must match the dimension");
    std::vector<std::size_t> stride(static_cast<std::size_t>(d) + 1, 1);
    for (int i = d - 1; i >= 0; --i)
        stride[static_cast<std::size_t>(i)] = stride[static_cast<std::size_t>(i) + 1] * static_cast<std::size_t>(nodes[static_cast<std::size_t>(i)]);
    const std::size_t total = stride[0];

    std::vector<Complex> v(total);
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (std::size_t flat = 0; flat < total; ++flat) {
        Vec x = center;
        std::size_t rem = flat;
        for (int i = 0; i < d; ++i) {
            auto si = static_cast<std::size_t>(i);
            int j = static_cast<int>(rem / stride[si + 1]);
            rem %= stride[si + 1];
            double th = 2.0 * std::numbers::pi * j / nodes[si];
            x(i) += std::polar(radii[si], th);
        }
        v[flat] = f(x);
    }

    // In-place DFT along each axis: v[.., m, ..] <- (1/N) sum_j v[.., j, ..] e^{-2 pi i m j / N}.
    std::vector<Complex> line;
    for (int i = 0; i < d; ++i) {
        auto si = static_cast<std::size_t>(i);
        const int N = nodes[si];
        const std::size_t s = stride[si + 1];
        line.assign(static_cast<std::size_t>(N), Complex{});
        std::vector<Complex> tw(static_cast<std::size_t>(N));
        for (int j = 0; j < N; ++j)
            tw[static_cast<std::size_t>(j)] = std::polar(1.0, -2.0 * std::numbers::pi * j / N);
        for (std::size_t base = 0; base < total; ++base) {
            if ((base / s) % static_cast<std::size_t>(N) != 0)
                continue;
            for (int m = 0; m < N; ++m) {
                Complex acc{};
                for (int j = 0; j < N; ++j)
                    acc += v[base + static_cast<std::size_t>(j) * s] * tw[static_cast<std::size_t>((m * j) % N)];
                line[static_cast<std::size_t>(m)] = acc / static_cast<double>(N);
            }
            for (int m = 0; m < N; ++m)
                v[base + static_cast<std::size_t>(m) * s] = line[static_cast<std::size_t>(m)];
        }
    }

    CPolynomial out(d);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        double scale = 1.0;
        for (int i = 0; i < d; ++i) {
            auto si = static_cast<std::size_t>(i);
            idx[si] = static_cast<int>(rem / stride[si + 1]);
            rem %= stride[si + 1];
            scale *= std::pow(radii[si], idx[si]);
        }
        MultiIndex I(idx);
        if (keep && !keep(I))
            continue;
        out.add_term(I, v[flat] / scale);
    }
    return out;
}

}  // namespace symdom
