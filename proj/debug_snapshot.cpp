#include <cstdio>
#include "toponav/benchmark.hpp"
using namespace toponav;
int main() {
    BenchmarkConfig cfg;
    cfg.scenario = 1; cfg.size = 10; cfg.seeds = {4}; cfg.slip_prob = 0.0;
    cfg.episodes = 1; cfg.train_episodes = 0; cfg.agent.max_steps_episode = 200;
    const GridWorld world = GridWorld::make_scenario(1, 10, 4, cfg.detection_range, 0.0, cfg.feature_dim);
    std::printf("start (%d,%d) goal (%d,%d)\n", world.start().x, world.start().y, world.goal().x, world.goal().y);
    NavigationAgent agent(AgentMode::Full, cfg.agent, cfg.reward, cfg.selection);
    MappingState mapping(cfg.tau_sim, cfg.feature_dim);
    Rng rng = Rng::derive(4, "train");
    int wins = 0;
    for (int e = 0; e < 300; ++e) {
        auto r = agent.run_episode(world, mapping, rng, {.learn = true});
        if (r.success) ++wins;
        if (e % 50 == 49) { std::printf("ep %d wins %d eps %.3f\n", e, wins, agent.epsilon()); wins,wins=0; }
    }
    // greedy eval
    int ok = 0;
    Rng erng = Rng::derive(4, "eval");
    for (int e = 0; e < 10; ++e) {
        MappingState copy = mapping;
        auto r = agent.run_episode(world, copy, erng, {.learn = false});
        ok += r.success; std::printf("eval %d success %d steps %d\n", e, (int)r.success, r.steps);
    }
    return 0;
}
