#include <cstdio>
#include "toponav/benchmark.hpp"
using namespace toponav;

// replica of train_edge_policy with instrumentation
int main() {
    const ReachabilitySetup setup = make_reachability_setup(3, 4, 0.0, 4);
    const GridWorld& world = setup.world;
    AgentConfig cfg; cfg.epsilon_decay_steps = 2000;
    Rng rng = Rng::derive(11, "reachability");
    EdgePolicy p0 = train_edge_policy(world, {2,3}, {6,3}, cfg, 400, rng);
    (void)estimate_edge_success(world, setup.map, p0, {0,1}, 200, 50, rng);

    Cell from{6,3}, to{10,3};
    QFunction q(cfg.learning_rate, cfg.discount, {0,1,2,3});
    ReplayBuffer buffer(cfg.buffer_capacity);
    long long step = 0; int reached = 0;
    auto eps_at = [&](long long n) {
        double frac = std::min(1.0, double(n)/cfg.epsilon_decay_steps);
        return cfg.epsilon_start + frac*(cfg.epsilon_end - cfg.epsilon_start);
    };
    for (int e = 0; e < 400; ++e) {
        Cell s = from;
        for (int t = 0; t < 3*cfg.max_steps_subgoal && s != to; ++t) {
            Action a = select_action(q, s, eps_at(step), rng);
            StepOutcome out = world.step(s, a, rng);
            ++step;
            bool terminal = out.next_state == to;
            buffer.push({s, (int)a, terminal ? 1.0 : 0.0, out.next_state, terminal});
            if (buffer.size() >= (size_t)cfg.batch_size)
                q.update_batch(buffer.sample(cfg.batch_size, rng));
            s = out.next_state;
        }
        if (s == to) ++reached;
        if (e % 100 == 0) std::printf("ep %d eps %.3f reached so far %d Q(9,3)E=%.4f\n", e, eps_at(step), reached, q.value({9,3},1));
    }
    std::printf("reached %d/400 steps=%lld\n", reached, step);
    return 0;
}
