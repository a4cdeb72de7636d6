#include <cstdio>
#include "toponav/benchmark.hpp"
using namespace toponav;
int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::atoll(argv[1]) : 1;
    BenchmarkConfig cfg;
    cfg.agent.max_steps_episode = 150;
    cfg.agent.epsilon_decay_steps = 18000;
    const GridWorld world = GridWorld::make_scenario(2, 20, seed, 5.0, 0.1, 8);
    std::printf("start (%d,%d) goal (%d,%d) manhattan %d\n", world.start().x,
                world.start().y, world.goal().x, world.goal().y,
                std::abs(world.goal().x-world.start().x)+std::abs(world.goal().y-world.start().y));
    NavigationAgent agent(AgentMode::Full, cfg.agent, cfg.reward, cfg.selection);
    MappingState mapping(cfg.tau_sim, cfg.feature_dim);
    Rng rng = Rng::derive(seed, "train");
    int wins = 0;
    for (int e = 0; e < 200; ++e) {
        auto r = agent.run_episode(world, mapping, rng, {.learn = true});
        wins += r.success;
        if (e % 50 == 49) { std::printf("train ep %-3d wins %d\n", e, wins); wins = 0; }
    }
    Rng erng = Rng::derive(seed, "eval");
    MappingState copy = mapping;
    std::vector<SubgoalEvent> trace;
    auto r = agent.run_episode(world, copy, erng, {.learn = false, .trace = &trace});
    std::printf("eval success %d steps %d events %zu\n", (int)r.success, r.steps, trace.size());
    for (size_t i = 0; i < trace.size() && i < 20; ++i)
        std::printf("  t=%-3d %c (%d,%d) n%d\n", trace[i].t, trace[i].kind,
                    trace[i].target.x, trace[i].target.y, trace[i].node_id);
    return 0;
}
