#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "toponav/geometry.hpp"
#include "toponav/rng.hpp"

namespace toponav {

// One experience tuple; `choice` is a primitive action index for
// sub-controllers or a subgoal node id for the meta-controller.
struct Transition {
    Cell s;
    int choice = 0;
    double reward = 0.0;
    Cell s_next;
    bool terminal = false;
};

// Fixed-capacity FIFO ring of transitions.
class ReplayBuffer {
  public:
    explicit ReplayBuffer(std::size_t capacity);

    void push(const Transition& t);
    std::size_t size() const { return entries_.size(); }
    std::size_t capacity() const { return capacity_; }

    // Uniform sample with replacement.
    std::vector<Transition> sample(std::size_t batch, Rng& rng) const;

    // i-th oldest entry.
    const Transition& at(std::size_t i) const;

  private:
    std::size_t capacity_;
    std::vector<Transition> entries_;
    std::size_t next_ = 0;  // overwrite position once full
};

// Tabular Q-function over (state, choice); missing entries read as 0. When a
// fixed choice set is given the bootstrap max ranges over it; otherwise over
// choices seen so far for the state (plus the implicit 0 of unseen ones).
class QFunction {
  public:
    QFunction(double learning_rate, double discount,
              std::vector<int> choice_set = {});

    double value(Cell s, int choice) const;
    double max_value(Cell s) const;

    // Argmax over `candidates`, first (lowest) index winning ties.
    int argmax(Cell s, std::span<const int> candidates) const;

    // Q(s,c) += lr * (target - Q(s,c)), target = r (+ discount * max' unless
    // terminal); applied sequentially in batch order. Batch must be nonempty.
    void update_batch(std::span<const Transition> batch);

    double learning_rate() const { return learning_rate_; }
    double discount() const { return discount_; }
    std::size_t size() const { return table_.size(); }
    double max_abs_value() const;

    // Entries sorted by (state, choice), for snapshots and tests.
    struct Entry {
        Cell s;
        int choice;
        double value;
    };
    std::vector<Entry> entries() const;
    void set(Cell s, int choice, double value);

  private:
    struct Key {
        Cell s;
        int choice;
        bool operator==(const Key& o) const { return s == o.s && choice == o.choice; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = CellHash{}(k.s);
            return h * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(k.choice);
        }
    };

    double learning_rate_;
    double discount_;
    std::vector<int> choice_set_;
    std::unordered_map<Key, double, KeyHash> table_;
    std::unordered_map<Cell, std::vector<int>, CellHash> seen_choices_;
};

}  // namespace toponav
