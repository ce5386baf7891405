#include "pwclock/snapshot_buffer.hpp"

#include <cmath>
#include <string>

namespace pwclock {

SnapshotBuffer::SnapshotBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) {
        throw InvalidDimension("SnapshotBuffer: capacity must be >= 1");
    }
}

void SnapshotBuffer::store(int step, const PureState& psi) {
    auto it = entries_.find(step);
    if (it != entries_.end()) {
        it->second = psi;
        return;
    }
    if (capacity_ && entries_.size() >= *capacity_) {
        // Evict the smallest step other than the pinned step 0.
        auto victim = entries_.begin();
        if (victim->first == 0) {
            ++victim;
        }
        if (victim == entries_.end()) {
            return;  // only the pinned entry fits; keep it
        }
        entries_.erase(victim);
    }
    entries_.emplace(step, psi);
}

double SnapshotBuffer::compare(int step, const PureState& psi) const {
    const double mod = std::abs(overlap(at(step), psi));
    return mod * mod;
}

const PureState& SnapshotBuffer::at(int step) const {
    auto it = entries_.find(step);
    if (it == entries_.end()) {
        throw SnapshotMissing("SnapshotBuffer: no entry at step " + std::to_string(step));
    }
    return it->second;
}

}  // namespace pwclock
