#include <cstdio>
#include <cstdlib>
#include "toponav/benchmark.hpp"
using namespace toponav;

void run_case(int cap, double d_thresh, int sub_cap, int nseeds) {
    BenchmarkConfig cfg;
    cfg.size = 20;
    cfg.episodes = 10;
    cfg.train_episodes = 200;
    cfg.agent.max_steps_episode = cap;
    cfg.agent.epsilon_decay_steps = 18000;
    cfg.agent.d_thresh = d_thresh;
    cfg.agent.max_steps_subgoal = sub_cap;
    cfg.seeds.clear();
    for (int i = 1; i <= nseeds; ++i) cfg.seeds.push_back(i);
    double s3[4], cov[4];
    cfg.scenario = 3;
    int i = 0;
    for (Ablation ab : {Ablation::Full, Ablation::NoHierarchy, Ablation::NoIntrinsic}) {
        cfg.ablation = ab;
        const BenchmarkReport r = run_benchmark(cfg);
        s3[i] = r.success_rate.mean;
        cov[i] = r.coverage.mean;
        ++i;
    }
    cfg.scenario = 2;
    cfg.ablation = Ablation::Full;
    const double s2_full = run_benchmark(cfg).success_rate.mean;
    cfg.ablation = Ablation::NoIntrinsic;
    const double s2_b0 = run_benchmark(cfg).success_rate.mean;
    std::printf("cap=%d dt=%.0f sub=%d | S3 full %.2f flat %.2f noint %.2f | cov %.3f/%.3f | S2 %.2f/%.2f r=%.2f\n",
                cap, d_thresh, sub_cap, s3[0], s3[1], s3[2], cov[0], cov[2], s2_full,
                s2_b0, s2_b0 > 0 ? s2_full / s2_b0 : 99.0);
}

int main(int argc, char** argv) {
    const int nseeds = argc > 1 ? std::atoi(argv[1]) : 16;
    run_case(400, 5.0, 25, nseeds);
    run_case(400, 3.0, 25, nseeds);
    run_case(400, 3.0, 12, nseeds);
    run_case(300, 3.0, 12, nseeds);
    return 0;
}
