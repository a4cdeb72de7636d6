#include <cstdio>
#include <cstdlib>
#include "toponav/benchmark.hpp"
using namespace toponav;

void probe(Ablation ab, const char* name, int nseeds) {
    double tot_cov = 0, tot_steps = 0, tot_hops = 0, tot_succ = 0;
    int n = 0;
    for (int seed = 1; seed <= nseeds; ++seed) {
        BenchmarkConfig cfg;
        cfg.agent.epsilon_decay_steps = 18000;
        RewardConfig rc = cfg.reward;
        if (ab == Ablation::NoIntrinsic) rc.beta = 0.0;
        const GridWorld world = GridWorld::make_scenario(3, 20, seed, 5.0, 0.1, 8);
        NavigationAgent agent(AgentMode::Full, cfg.agent, rc, cfg.selection);
        MappingState mapping(cfg.tau_sim, cfg.feature_dim);
        Rng rng = Rng::derive(seed, "train");
        for (int e = 0; e < 200; ++e) agent.run_episode(world, mapping, rng, {.learn = true});
        Rng erng = Rng::derive(seed, "eval");
        for (int e = 0; e < 5; ++e) {
            MappingState copy = mapping;
            std::vector<SubgoalEvent> trace;
            auto r = agent.run_episode(world, copy, erng, {.learn = false, .trace = &trace});
            int hops = 0;
            for (auto& ev : trace) hops += ev.kind == 'N';
            tot_cov += r.coverage; tot_steps += r.steps; tot_hops += hops;
            tot_succ += r.success; ++n;
        }
    }
    std::printf("%-6s succ %.2f cov %.3f steps %6.1f hops %.1f\n", name,
                tot_succ / n, tot_cov / n, tot_steps / n, tot_hops / n);
}

int main(int argc, char** argv) {
    const int nseeds = argc > 1 ? std::atoi(argv[1]) : 8;
    probe(Ablation::Full, "full", nseeds);
    probe(Ablation::NoIntrinsic, "noint", nseeds);
    return 0;
}
