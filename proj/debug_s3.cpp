#include <cstdio>
#include "toponav/benchmark.hpp"
using namespace toponav;
int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::atoll(argv[1]) : 2;
    BenchmarkConfig cfg;
    const GridWorld world = GridWorld::make_scenario(3, 20, seed, 5.0, 0.1, 8);
    std::printf("start (%d,%d) goal (%d,%d) bfs %d landmarks %zu\n", world.start().x,
                world.start().y, world.goal().x, world.goal().y,
                world.bfs_distance(world.start(), world.goal()), world.landmarks().size());
    NavigationAgent agent(AgentMode::Full, cfg.agent, cfg.reward, cfg.selection);
    MappingState mapping(cfg.tau_sim, cfg.feature_dim);
    Rng rng = Rng::derive(seed, "train");
    int wins = 0;
    for (int e = 0; e < 200; ++e) {
        auto r = agent.run_episode(world, mapping, rng, {.learn = true});
        wins += r.success;
        if (e % 50 == 49) { std::printf("train ep %d wins %d\n", e, wins); wins = 0; }
    }
    Rng erng = Rng::derive(seed, "eval");
    for (int e = 0; e < 3; ++e) {
        MappingState copy = mapping;
        std::vector<SubgoalEvent> trace;
        auto r = agent.run_episode(world, copy, erng, {.learn = false, .trace = &trace});
        std::printf("eval %d: success %d steps %d events %zu\n", e, (int)r.success, r.steps, trace.size());
        if (!r.success) {
            for (size_t i = 0; i < trace.size() && i < 25; ++i)
                std::printf("  t=%-3d %c (%d,%d) node %d\n", trace[i].t, trace[i].kind,
                            trace[i].target.x, trace[i].target.y, trace[i].node_id);
        }
    }
    return 0;
}
