#include "ca3cam/oracle.hpp"

#include <stdexcept>

namespace ca3cam {

IndexSet OracleCam::learn(const MemoryPattern& pattern) {
    if (pattern.content.empty()) throw std::invalid_argument("cannot learn an empty content");
    auto& slot = table_[pattern.cue];
    auto forgotten = difference(slot, pattern.content);
    slot = pattern.content;
    return forgotten;
}

IndexSet OracleCam::recall_by_cue(std::size_t cue) const {
    auto it = table_.find(cue);
    return it == table_.end() ? IndexSet{} : it->second;
}

IndexSet OracleCam::recall_by_content(const IndexSet& fragment) const {
    if (fragment.empty()) throw std::invalid_argument("cannot recall by an empty fragment");
    IndexSet cues;
    for (const auto& [cue, content] : table_)
        if (intersects(content, fragment)) cues.insert(cue);
    return cues;
}

OperationResult oracle_apply(OracleCam& oracle, const Operation& op) {
    OperationResult expected;
    expected.kind = op.kind();
    expected.start = op.start.value_or(0);
    if (const auto* learn = std::get_if<Learn>(&op.body)) {
        expected.echo = {{learn->pattern.cue}, learn->pattern.content};
        expected.forgotten = oracle.learn(learn->pattern);
    } else if (const auto* by_cue = std::get_if<RecallByCue>(&op.body)) {
        expected.echo = {{by_cue->cue}, {}};
        expected.answer = oracle.recall_by_cue(by_cue->cue);
    } else {
        const auto& fragment = std::get<RecallByContent>(op.body).fragment;
        expected.echo = {{}, fragment};
        expected.answer = oracle.recall_by_content(fragment);
    }
    return expected;
}

}  // namespace ca3cam
