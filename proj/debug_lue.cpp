#include <cstdio>
#include <cstdlib>
#include "toponav/benchmark.hpp"
using namespace toponav;
int main(int argc, char** argv) {
    const int nseeds = argc > 1 ? std::atoi(argv[1]) : 8;
    for (double lue : {1.0, 2.0, 3.0}) {
        for (Ablation ab : {Ablation::Full, Ablation::NoIntrinsic}) {
            BenchmarkConfig cfg;
            cfg.scenario = 3;
            cfg.size = 20;
            cfg.episodes = 10;
            cfg.train_episodes = 200;
            cfg.agent.epsilon_decay_steps = 18000;
            cfg.reward.lambda_ue = lue;
            cfg.ablation = ab;
            cfg.seeds.clear();
            for (int i = 1; i <= nseeds; ++i) cfg.seeds.push_back(i);
            const BenchmarkReport r = run_benchmark(cfg);
            std::printf("lue=%.1f %-6s succ %.2f cov %.3f steps %6.1f\n", lue,
                        ablation_name(ab).c_str(), r.success_rate.mean,
                        r.coverage.mean, r.navigation_steps.mean);
        }
    }
    return 0;
}
