#include <cstdio>
#include "toponav/benchmark.hpp"
using namespace toponav;
int main() {
    const ReachabilitySetup setup = make_reachability_setup(3, 4, 0.0, 4);
    for (int nid : setup.path) {
        const auto& n = setup.map.node(nid);
        std::printf("node %d at (%.1f,%.1f)\n", nid, n.position.x, n.position.y);
    }
    AgentConfig cfg;
    cfg.epsilon_decay_steps = 2000;
    const ReachabilityReport r = verify_reachability(setup, setup.path, 200, cfg, 400, 11);
    for (double e : r.edge_estimates) std::printf("edge est %.3f\n", e);
    std::printf("product %.3f empirical %.3f bound %.3f\n", r.product, r.empirical, r.bound);
    return 0;
}
