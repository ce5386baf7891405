#pragma once

/**
 * @file
 * Classical snapshot buffer: an indexed store of state copies. Comparing
 * the current state against an earlier one requires a retained copy; on a
 * classical simulator that copy is exact, so the buffer just stores
 * amplitude vectors keyed by step index.
 */

#include <map>
#include <optional>

#include "pwclock/quantum_state.hpp"

namespace pwclock {

class SnapshotBuffer {
  public:
    /// Unbounded buffer.
    SnapshotBuffer() = default;

    /// Buffer holding at most `capacity` entries.
    /// @throws InvalidDimension for capacity == 0.
    explicit SnapshotBuffer(std::size_t capacity);

    /// Records a copy of `psi` at `step`. Storing at an existing step
    /// replaces that entry. When a bounded buffer is full, the entry with
    /// the smallest step index other than 0 is evicted first: step 0 is
    /// pinned, since it is the reference every overlap is computed against.
    /// If step 0 is the only occupant of a full capacity-1 buffer, the new
    /// entry is dropped in its favor.
    void store(int step, const PureState& psi);

    /// |<stored(step)|psi>|^2.
    /// @throws SnapshotMissing when nothing is stored at `step`.
    double compare(int step, const PureState& psi) const;

    bool contains(int step) const { return entries_.count(step) > 0; }

    /// @throws SnapshotMissing when nothing is stored at `step`.
    const PureState& at(int step) const;

    std::size_t size() const { return entries_.size(); }
    std::optional<std::size_t> capacity() const { return capacity_; }

    const std::map<int, PureState>& entries() const { return entries_; }

  private:
    std::optional<std::size_t> capacity_;
    std::map<int, PureState> entries_;
};

}  // namespace pwclock
