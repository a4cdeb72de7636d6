#include <cstdio>
#include "toponav/benchmark.hpp"
using namespace toponav;
int main() {
    const ReachabilitySetup setup = make_reachability_setup(3, 4, 0.0, 4);
    const GridWorld& world = setup.world;
    std::printf("world %dx%d obstacles %zu\n", world.width(), world.height(), world.obstacles().size());
    AgentConfig cfg;
    QFunction q(cfg.learning_rate, cfg.discount, {0,1,2,3});
    Rng rng(3);
    Cell s{6,3};
    int max_x = 0;
    for (int t = 0; t < 150; ++t) {
        Action a = select_action(q, s, 1.0, rng);
        StepOutcome out = world.step(s, a, rng);
        s = out.next_state;
        max_x = std::max(max_x, s.x);
        if (t < 15) std::printf("t=%d a=%d -> (%d,%d)\n", t, (int)a, s.x, s.y);
    }
    std::printf("max_x reached %d (target x=10)\n", max_x);
    return 0;
}
