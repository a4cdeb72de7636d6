#include <cstdio>
#include "toponav/benchmark.hpp"

using namespace toponav;

int main() {
    const ReachabilitySetup setup = make_reachability_setup(3, 4, 0.0, 4);
    std::printf("world %dx%d start (%d,%d) goal (%d,%d)\n", setup.world.width(),
                setup.world.height(), setup.world.start().x, setup.world.start().y,
                setup.world.goal().x, setup.world.goal().y);
    AgentConfig cfg;
    cfg.epsilon_decay_steps = 2000;
    Rng rng(5);
    const EdgePolicy p = train_edge_policy(setup.world, {2, 3}, {6, 3}, cfg, 400, rng);
    std::printf("table size %zu\n", p.q.size());
    for (int a = 0; a < 4; ++a) {
        std::printf("Q((2,3),%d) = %.4f  Q((5,3),%d) = %.4f\n", a, p.q.value({2, 3}, a),
                    a, p.q.value({5, 3}, a));
    }
    Rng erng(9);
    const double est = estimate_edge_success(setup.world, setup.map, p, {0, 1}, 50, 50, erng);
    std::printf("estimate %.3f\n", est);
    // manual greedy rollout
    Cell s{2, 3};
    for (int t = 0; t < 12; ++t) {
        const Action a = select_action(p.q, s, 0.0, erng);
        s = setup.world.step(s, a, erng).next_state;
        std::printf("t=%d -> (%d,%d) a=%d\n", t, s.x, s.y, static_cast<int>(a));
        if (s == Cell{6, 3}) break;
    }
    return 0;
}
