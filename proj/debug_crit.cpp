#include <chrono>
#include <cstdio>
#include <cstdlib>
#include "toponav/benchmark.hpp"
using namespace toponav;

int main(int argc, char** argv) {
    const int scenario = argc > 1 ? std::atoi(argv[1]) : 3;
    const int nseeds = argc > 2 ? std::atoi(argv[2]) : 5;
    const int train = argc > 3 ? std::atoi(argv[3]) : 200;
    BenchmarkConfig cfg;
    cfg.scenario = scenario;
    cfg.size = 20;
    cfg.episodes = 20;
    cfg.train_episodes = train;
    cfg.seeds.clear();
    for (int i = 1; i <= nseeds; ++i) cfg.seeds.push_back(i);
    for (Ablation ab : {Ablation::Full, Ablation::NoTopoMap, Ablation::NoHierarchy,
                        Ablation::NoIntrinsic}) {
        cfg.ablation = ab;
        auto t0 = std::chrono::steady_clock::now();
        const BenchmarkReport r = run_benchmark(cfg);
        auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%-13s success %.3f (sd %.3f)  steps %6.1f  cov %.3f (sd %.3f)  [%.1fs]\n",
                    ablation_name(ab).c_str(), r.success_rate.mean, r.success_rate.stddev,
                    r.navigation_steps.mean, r.coverage.mean, r.coverage.stddev, dt);
    }
    return 0;
}
