#include <cstdio>
#include "toponav/benchmark.hpp"
using namespace toponav;
int main() {
    BenchmarkConfig cfg;
    cfg.agent.max_steps_episode = 200;
    const GridWorld world = GridWorld::make_scenario(1, 10, 4, cfg.detection_range, 0.0, cfg.feature_dim);
    NavigationAgent agent(AgentMode::Full, cfg.agent, cfg.reward, cfg.selection);
    MappingState mapping(cfg.tau_sim, cfg.feature_dim);
    Rng rng = Rng::derive(4, "train");
    for (int e = 0; e < 300; ++e) agent.run_episode(world, mapping, rng, {.learn = true});

    // greedy eval with a subgoal trace
    MappingState copy = mapping;
    Rng erng = Rng::derive(4, "eval");
    std::vector<SubgoalEvent> trace;
    auto r = agent.run_episode(world, copy, erng, {.learn = false, .trace = &trace});
    std::printf("eval success %d steps %d; %zu subgoal events\n", (int)r.success, r.steps, trace.size());
    for (size_t i = 0; i < trace.size() && i < 30; ++i)
        std::printf("  t=%d kind=%c target (%d,%d) node %d\n", trace[i].t, trace[i].kind,
                    trace[i].target.x, trace[i].target.y, trace[i].node_id);
    // pursuit tables around start: start (9,6), goal (0,7): key toward goal is West-ish
    auto key = kPursuitKey;
    const QFunction* q = agent.sub(key);
    if (q) for (int a = 0; a < 4; ++a) std::printf("pursuit Q(sign(-1,1),%d)=%.3f\n", a, q->value({-1,1}, a));
    return 0;
}
