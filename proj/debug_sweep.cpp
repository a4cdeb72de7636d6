#include <chrono>
#include <cstdio>
#include <cstdlib>
#include "toponav/benchmark.hpp"
using namespace toponav;

int main(int argc, char** argv) {
    const int cap = argc > 1 ? std::atoi(argv[1]) : 150;
    const int decay = argc > 2 ? std::atoi(argv[2]) : 18000;
    const int sub_cap = argc > 3 ? std::atoi(argv[3]) : 15;
    const int nseeds = argc > 4 ? std::atoi(argv[4]) : 8;
    BenchmarkConfig cfg;
    cfg.size = 20;
    cfg.episodes = 20;
    cfg.train_episodes = 200;
    cfg.agent.max_steps_episode = cap;
    cfg.agent.epsilon_decay_steps = decay;
    cfg.agent.max_steps_subgoal = sub_cap;
    cfg.seeds.clear();
    for (int i = 1; i <= nseeds; ++i) cfg.seeds.push_back(i);
    std::printf("cap=%d decay=%d sub=%d seeds=%d\n", cap, decay, sub_cap, nseeds);
    cfg.scenario = 3;
    for (Ablation ab : {Ablation::Full, Ablation::NoTopoMap, Ablation::NoHierarchy,
                        Ablation::NoIntrinsic}) {
        cfg.ablation = ab;
        const BenchmarkReport r = run_benchmark(cfg);
        std::printf("S3 %-13s success %.3f  steps %6.1f  cov %.3f\n",
                    ablation_name(ab).c_str(), r.success_rate.mean,
                    r.navigation_steps.mean, r.coverage.mean);
    }
    cfg.scenario = 2;
    double full_s = 0.0;
    for (Ablation ab : {Ablation::Full, Ablation::NoIntrinsic}) {
        cfg.ablation = ab;
        const BenchmarkReport r = run_benchmark(cfg);
        if (ab == Ablation::Full) full_s = r.success_rate.mean;
        else
            std::printf("S2 full %.3f beta0 %.3f ratio %.2f\n", full_s,
                        r.success_rate.mean,
                        r.success_rate.mean > 0 ? full_s / r.success_rate.mean : 99.0);
    }
    return 0;
}
