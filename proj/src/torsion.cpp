#include "m1n/torsion.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace m1n {

namespace {

void check_modulus(long long N) {
    if (N < 1) fail(errc::out_of_range, "modulus must be positive");
    if (N > kTorsionCap) fail(errc::out_of_range, "modulus capped at " + std::to_string(kTorsionCap));
}

} // namespace

long long exact_order_count(long long t, long long N) {
    check_modulus(N);
    if (t < 1 || N % t != 0) fail(errc::out_of_range, std::to_string(t) + " does not divide " + std::to_string(N));
    long long count = 0;
    for (long long x = 0; x < N; ++x) {
        for (long long y = 0; y < N; ++y) {
            long long px = x, py = y, order = 1;
            while (px != 0 || py != 0) {
                px = (px + x) % N;
                py = (py + y) % N;
                ++order;
            }
            if (order == t) ++count;
        }
    }
    return count;
}

long long orbit_invariant(long long x, long long y, long long a) {
    if (a < 1) fail(errc::out_of_range, "modulus must be positive");
    return std::gcd(std::gcd(((x % a) + a) % a, ((y % a) + a) % a), a);
}

std::vector<MonodromyOrbit> monodromy_orbits(long long a) {
    check_modulus(a);
    const size_t total = static_cast<size_t>(a * a);
    std::vector<bool> visited(total, false);
    std::vector<MonodromyOrbit> orbits;

    auto index = [a](long long x, long long y) { return static_cast<size_t>(x * a + y); };

    for (long long sx = 0; sx < a; ++sx) {
        for (long long sy = 0; sy < a; ++sy) {
            if (visited[index(sx, sy)]) continue;
            long long size = 0;
            std::queue<std::pair<long long, long long>> frontier;
            visited[index(sx, sy)] = true;
            frontier.push({sx, sy});
            while (!frontier.empty()) {
                auto [x, y] = frontier.front();
                frontier.pop();
                ++size;
                const std::pair<long long, long long> next[2] = {{(x + y) % a, y}, {x, (x + y) % a}};
                for (auto [nx, ny] : next) {
                    if (!visited[index(nx, ny)]) {
                        visited[index(nx, ny)] = true;
                        frontier.push({nx, ny});
                    }
                }
            }
            orbits.push_back({orbit_invariant(sx, sy, a), size, {sx, sy}});
        }
    }
    std::sort(orbits.begin(), orbits.end(), [](const MonodromyOrbit& l, const MonodromyOrbit& r) {
        if (l.invariant != r.invariant) return l.invariant > r.invariant;
        return l.representative < r.representative;
    });
    return orbits;
}

} // namespace m1n
