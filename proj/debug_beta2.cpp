#include <cstdio>
#include <cstdlib>
#include "toponav/benchmark.hpp"
using namespace toponav;
int main(int argc, char** argv) {
    const double beta = argc > 1 ? std::atof(argv[1]) : 0.05;
    const std::uint64_t seed = argc > 2 ? std::atoll(argv[2]) : 1;
    BenchmarkConfig cfg;
    cfg.agent.epsilon_decay_steps = 18000;
    cfg.reward.beta = beta;
    const GridWorld world = GridWorld::make_scenario(2, 20, seed, 5.0, 0.1, 8);
    std::printf("beta=%.2f seed=%llu bfs=%d\n", beta, (unsigned long long)seed,
                world.bfs_distance(world.start(), world.goal()));
    NavigationAgent agent(AgentMode::Full, cfg.agent, cfg.reward, cfg.selection);
    MappingState mapping(cfg.tau_sim, cfg.feature_dim);
    Rng rng = Rng::derive(seed, "train");
    int wins = 0; long steps = 0;
    for (int e = 0; e < 200; ++e) {
        auto r = agent.run_episode(world, mapping, rng, {.learn = true});
        wins += r.success; steps += r.steps;
        if (e % 50 == 49) { std::printf("ep %-3d wins %2d avg %5.1f\n", e, wins, steps/50.0); wins=0; steps=0; }
    }
    Rng erng = Rng::derive(seed, "eval");
    int ok = 0;
    for (int e = 0; e < 10; ++e) {
        MappingState copy = mapping;
        std::vector<SubgoalEvent> trace;
        auto r = agent.run_episode(world, copy, erng, {.learn = false, .trace = &trace});
        ok += r.success;
        if (e == 0) {
            std::printf("eval0 success %d steps %d | ", (int)r.success, r.steps);
            for (size_t i = 0; i < trace.size() && i < 12; ++i)
                std::printf("%c%d@(%d,%d) ", trace[i].kind, trace[i].t, trace[i].target.x, trace[i].target.y);
            std::printf("\n");
        }
    }
    std::printf("eval success %d/10\n", ok);
    return 0;
}
