#include <cstdio>
#include <cstdlib>
#include "toponav/benchmark.hpp"
using namespace toponav;

double run_one(int scenario, Ablation ab, double beta, double pen_scale, int nseeds,
               double* cov_out = nullptr) {
    BenchmarkConfig cfg;
    cfg.scenario = scenario;
    cfg.size = 20;
    cfg.episodes = 10;
    cfg.train_episodes = 200;
    cfg.agent.epsilon_decay_steps = 18000;
    cfg.reward.beta = beta;
    cfg.reward.lambda_p = 0.1 * pen_scale;
    cfg.reward.lambda_te = 0.01 * pen_scale;
    cfg.reward.r_obstacle = -1.0 * pen_scale;
    cfg.ablation = ab;
    cfg.seeds.clear();
    for (int i = 1; i <= nseeds; ++i) cfg.seeds.push_back(i);
    const BenchmarkReport r = run_benchmark(cfg);
    if (cov_out) *cov_out = r.coverage.mean;
    return r.success_rate.mean;
}

int main(int argc, char** argv) {
    const int nseeds = argc > 1 ? std::atoi(argv[1]) : 12;
    for (double pen : {1.0, 0.2}) {
        for (double beta : {0.0, 0.05, 0.1, 0.2, 0.3}) {
            double cov2, cov3;
            const double s2 = run_one(2, Ablation::Full, beta, pen, nseeds, &cov2);
            const double s3 = run_one(3, Ablation::Full, beta, pen, nseeds, &cov3);
            std::printf("pen=%.1f beta=%.2f | S2 %.2f cov %.3f | S3 %.2f cov %.3f\n",
                        pen, beta, s2, cov2, s3, cov3);
        }
        const double f2 = run_one(2, Ablation::NoHierarchy, 0.3, pen, nseeds);
        const double f3 = run_one(3, Ablation::NoHierarchy, 0.3, pen, nseeds);
        std::printf("pen=%.1f flat(b.3)    | S2 %.2f           | S3 %.2f\n", pen, f2, f3);
    }
    return 0;
}
