#include <cstdio>
#include "toponav/benchmark.hpp"
using namespace toponav;
int main() {
    const ReachabilitySetup setup = make_reachability_setup(3, 4, 0.0, 4);
    AgentConfig cfg;
    cfg.epsilon_decay_steps = 2000;
    Rng rng = Rng::derive(11, "reachability");
    EdgePolicy p0 = train_edge_policy(setup.world, {2,3}, {6,3}, cfg, 400, rng);
    double e0 = estimate_edge_success(setup.world, setup.map, p0, {0,1}, 200, 50, rng);
    EdgePolicy p1 = train_edge_policy(setup.world, {6,3}, {10,3}, cfg, 400, rng);
    std::printf("p1 table %zu\n", p1.q.size());
    for (int a = 0; a < 4; ++a)
        std::printf("Q((6,3),%d)=%.4f Q((9,3),%d)=%.4f\n", a, p1.q.value({6,3},a), a, p1.q.value({9,3},a));
    double e1 = estimate_edge_success(setup.world, setup.map, p1, {1,2}, 200, 50, rng);
    std::printf("e0=%.3f e1=%.3f\n", e0, e1);
    return 0;
}
