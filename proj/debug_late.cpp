#include <cstdio>
#include "toponav/benchmark.hpp"
using namespace toponav;
int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::atoll(argv[1]) : 1;
    BenchmarkConfig cfg;
    cfg.agent.max_steps_episode = 400;
    cfg.agent.epsilon_decay_steps = 18000;
    const GridWorld world = GridWorld::make_scenario(3, 20, seed, 5.0, 0.1, 8);
    std::printf("seed %llu bfs %d\n", (unsigned long long)seed,
                world.bfs_distance(world.start(), world.goal()));
    NavigationAgent agent(AgentMode::Full, cfg.agent, cfg.reward, cfg.selection);
    MappingState mapping(cfg.tau_sim, cfg.feature_dim);
    Rng rng = Rng::derive(seed, "train");
    int wins = 0, steps = 0;
    for (int e = 0; e < 200; ++e) {
        auto r = agent.run_episode(world, mapping, rng, {.learn = true});
        wins += r.success; steps += r.steps;
        if (e % 40 == 39) {
            std::printf("ep %-3d wins %2d avg steps %5.1f eps %.2f\n", e, wins,
                        steps / 40.0, agent.epsilon());
            wins = 0; steps = 0;
        }
    }
    Rng erng = Rng::derive(seed, "eval");
    for (int e = 0; e < 5; ++e) {
        MappingState copy = mapping;
        auto r = agent.run_episode(world, copy, erng, {.learn = false});
        std::printf("eval %d success %d steps %d\n", e, (int)r.success, r.steps);
    }
    return 0;
}
