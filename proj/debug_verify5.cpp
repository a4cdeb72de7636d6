#include <cstdio>
#include "toponav/benchmark.hpp"
using namespace toponav;
int main() {
    const ReachabilitySetup setup = make_reachability_setup(3, 4, 0.0, 4);
    const GridWorld& world = setup.world;
    QFunction q(0.1, 0.95, {0,1,2,3});
    Rng rng(3);
    int reached = 0;
    for (int e = 0; e < 100; ++e) {
        Cell s{6,3};
        for (int t = 0; t < 150 && !(s == Cell{10,3}); ++t) {
            Action a = select_action(q, s, 1.0, rng);
            s = world.step(s, a, rng).next_state;
        }
        if (s == Cell{10,3}) ++reached;
    }
    std::printf("random policy reached target in %d/100 episodes\n", reached);
    return 0;
}
