#pragma once

#include <cstddef>
#include <map>

#include "ca3cam/index_set.hpp"
#include "ca3cam/memory_ops.hpp"

namespace ca3cam {

/// Plain map-based model of what the CAM is supposed to answer.
class OracleCam {
public:
    /// Stores `pattern`, replacing any memory under the same cue. Returns the
    /// old content that the new one does not keep.
    IndexSet learn(const MemoryPattern& pattern);

    IndexSet recall_by_cue(std::size_t cue) const;

    /// Every cue whose content shares at least one bit with `fragment`.
    IndexSet recall_by_content(const IndexSet& fragment) const;

    const std::map<std::size_t, IndexSet>& table() const { return table_; }

private:
    std::map<std::size_t, IndexSet> table_;
};

/// Expected decode of `op` against the oracle, applying it when it is a Learn.
OperationResult oracle_apply(OracleCam& oracle, const Operation& op);

}  // namespace ca3cam
