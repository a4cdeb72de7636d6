#include "toponav/q_learning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace toponav {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw std::invalid_argument("replay capacity must be > 0");
    entries_.reserve(capacity);
}

void ReplayBuffer::push(const Transition& t) {
    if (entries_.size() < capacity_) {
        entries_.push_back(t);
        return;
    }
    entries_[next_] = t;  // overwrite the oldest
    next_ = (next_ + 1) % capacity_;
}

std::vector<Transition> ReplayBuffer::sample(std::size_t batch, Rng& rng) const {
    if (entries_.empty()) throw std::invalid_argument("sampling from empty buffer");
    std::vector<Transition> out;
    out.reserve(batch);
    for (std::size_t i = 0; i < batch; ++i) {
        out.push_back(entries_[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(entries_.size()) - 1))]);
    }
    return out;
}

const Transition& ReplayBuffer::at(std::size_t i) const {
    if (i >= entries_.size()) throw std::out_of_range("replay index");
    return entries_[(next_ + i) % entries_.size()];
}

QFunction::QFunction(double learning_rate, double discount,
                     std::vector<int> choice_set)
    : learning_rate_(learning_rate),
      discount_(discount),
      choice_set_(std::move(choice_set)) {
    if (learning_rate <= 0.0 || learning_rate > 1.0) {
        throw std::invalid_argument("learning_rate must be in (0, 1]");
    }
    if (discount < 0.0 || discount >= 1.0) {
        throw std::invalid_argument("discount must be in [0, 1)");
    }
}

double QFunction::value(Cell s, int choice) const {
    auto it = table_.find(Key{s, choice});
    return it == table_.end() ? 0.0 : it->second;
}

double QFunction::max_value(Cell s) const {
    if (!choice_set_.empty()) {
        double best = value(s, choice_set_.front());
        for (std::size_t i = 1; i < choice_set_.size(); ++i) {
            best = std::max(best, value(s, choice_set_[i]));
        }
        return best;
    }
    // Open choice universe: unseen choices read as 0.
    double best = 0.0;
    if (auto it = seen_choices_.find(s); it != seen_choices_.end()) {
        for (int c : it->second) best = std::max(best, value(s, c));
    }
    return best;
}

int QFunction::argmax(Cell s, std::span<const int> candidates) const {
    if (candidates.empty()) throw std::invalid_argument("argmax over no candidates");
    int best = candidates.front();
    double best_v = value(s, best);
    for (int c : candidates.subspan(1)) {
        const double v = value(s, c);
        if (v > best_v) {
            best_v = v;
            best = c;
        }
    }
    return best;
}

void QFunction::update_batch(std::span<const Transition> batch) {
    if (batch.empty()) throw std::invalid_argument("q_update needs a nonempty batch");
    for (const Transition& t : batch) {
        const double target =
            t.terminal ? t.reward : t.reward + discount_ * max_value(t.s_next);
        const Key key{t.s, t.choice};
        auto [it, fresh] = table_.try_emplace(key, 0.0);
        if (fresh && choice_set_.empty()) seen_choices_[t.s].push_back(t.choice);
        it->second += learning_rate_ * (target - it->second);
    }
}

double QFunction::max_abs_value() const {
    double m = 0.0;
    for (const auto& [k, v] : table_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<QFunction::Entry> QFunction::entries() const {
    std::vector<Entry> out;
    out.reserve(table_.size());
    for (const auto& [k, v] : table_) out.push_back({k.s, k.choice, v});
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
        if (a.s != b.s) return a.s < b.s;
        return a.choice < b.choice;
    });
    return out;
}

void QFunction::set(Cell s, int choice, double value) {
    const Key key{s, choice};
    auto [it, fresh] = table_.try_emplace(key, value);
    if (fresh && choice_set_.empty()) seen_choices_[s].push_back(choice);
    it->second = value;
}

}  // namespace toponav
