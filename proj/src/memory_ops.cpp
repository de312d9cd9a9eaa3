#include "ca3cam/memory_ops.hpp"

#include <algorithm>

namespace ca3cam {

const char* to_string(OperationKind kind) {
    switch (kind) {
        case OperationKind::learn: return "learn";
        case OperationKind::recall_by_cue: return "recall_by_cue";
        case OperationKind::recall_by_content: return "recall_by_content";
    }
    return "?";
}

Operation encode_operation(OperationKind kind, const IndexSet& cue_bits, const IndexSet& content_bits) {
    switch (kind) {
        case OperationKind::learn:
            if (cue_bits.size() != 1)
                throw std::invalid_argument("one-hot violation: learn needs exactly one cue bit, got " +
                                            to_string(cue_bits));
            return Operation{Learn{MemoryPattern{*cue_bits.begin(), content_bits}}, std::nullopt};
        case OperationKind::recall_by_cue:
            if (cue_bits.size() != 1)
                throw std::invalid_argument("one-hot violation: recall by cue needs exactly one cue bit, got " +
                                            to_string(cue_bits));
            if (!content_bits.empty()) throw std::invalid_argument("recall by cue takes no content bits");
            return Operation{RecallByCue{*cue_bits.begin()}, std::nullopt};
        case OperationKind::recall_by_content:
            if (!cue_bits.empty()) throw std::invalid_argument("recall by content takes no cue bits");
            return Operation{RecallByContent{content_bits}, std::nullopt};
    }
    throw std::invalid_argument("unknown operation kind");
}

void TimingContract::validate() const {
    if (learn_input_repeat < 1) throw std::invalid_argument("learn input repeat must be at least 1");
    if (learn_input_repeat > learn_next_offset)
        throw std::invalid_argument("learn input must end before the next operation may start");
    if (echo_offset < 1 || echo_offset >= recall_latency || echo_offset >= learn_latency - 1)
        throw std::invalid_argument("echo offset must precede the operation results");
    if (learn_next_offset < 1 || recall_next_offset < 1) throw std::invalid_argument("offsets must be positive");
}

namespace {

void check_content(const IndexSet& bits, std::size_t cont_size, std::size_t index, const char* what) {
    if (bits.empty()) throw OperationError(index, std::string(what) + " is empty");
    if (*bits.rbegin() >= cont_size)
        throw OperationError(index, std::string(what) + " bit " + std::to_string(*bits.rbegin()) +
                                        " outside content size " + std::to_string(cont_size));
}

void check_cue(std::size_t cue, std::size_t cue_count, std::size_t index) {
    if (cue >= cue_count)
        throw OperationError(index, "cue " + std::to_string(cue) + " outside cue count " + std::to_string(cue_count));
}

IndexSet shift(const IndexSet& content, std::size_t by) {
    IndexSet out;
    for (auto c : content) out.insert(out.end(), c + by);
    return out;
}

}  // namespace

CompiledProgram compile(const std::vector<Operation>& ops, const CamConfig& config, const TimingContract& contract,
                        Step earliest) {
    contract.validate();
    CompiledProgram program;
    auto& plan = program.plan;
    plan.cue_count = config.cue_count;
    plan.cont_size = config.cont_size;
    plan.contract = contract;
    plan.end_step = earliest - 1;
    plan.next_start = earliest;

    const auto width = config.width();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto& op = ops[i];
        const Step start = op.start.value_or(plan.next_start);
        if (start < plan.next_start)
            throw OperationError(i, "start " + std::to_string(start) + " violates spacing, earliest legal start is " +
                                        std::to_string(plan.next_start));

        snn::StimulusSchedule stimuli;
        if (const auto* learn = std::get_if<Learn>(&op.body)) {
            check_cue(learn->pattern.cue, config.cue_count, i);
            check_content(learn->pattern.content, config.cont_size, i, "learn content");
            auto neurons = shift(learn->pattern.content, config.cue_count);
            neurons.insert(learn->pattern.cue);
            stimuli = input_schedule(width, start, neurons, contract.learn_input_repeat);
        } else if (const auto* by_cue = std::get_if<RecallByCue>(&op.body)) {
            check_cue(by_cue->cue, config.cue_count, i);
            stimuli = input_schedule(width, start, {by_cue->cue}, 1);
        } else {
            const auto& fragment = std::get<RecallByContent>(op.body).fragment;
            check_content(fragment, config.cont_size, i, "recall fragment");
            stimuli = input_schedule(width, start, shift(fragment, config.cue_count), 1);
        }
        program.schedule.append(stimuli);

        PlannedOperation planned{op, start};
        planned.op.start = start;
        plan.ops.push_back(std::move(planned));
        plan.end_step = std::max(plan.end_step, start + contract.latency(op.kind()));
        plan.next_start = start + contract.next_offset(op.kind());
    }
    return program;
}

std::vector<OperationResult> decode(const snn::Raster& raster, const DecodePlan& plan) {
    std::vector<OperationResult> results;
    if (plan.ops.empty()) return results;
    const auto output = raster.population_index(pop::kOutput);
    const auto& contract = plan.contract;
    auto frame_at = [&](Step t) { return split_frame(raster.fired(t, output), plan.cue_count); };

    for (const auto& planned : plan.ops) {
        OperationResult result;
        result.kind = planned.op.kind();
        result.start = planned.start;
        const Step s = planned.start;
        const Step answer_step = s + contract.latency(result.kind);
        result.echo = frame_at(s + contract.echo_offset);
        auto flag = [&](std::string issue) {
            result.valid = false;
            result.issues.push_back(std::move(issue));
        };

        if (const auto* learn = std::get_if<Learn>(&planned.op.body)) {
            const MemoryFrame expected{{learn->pattern.cue}, learn->pattern.content};
            if (result.echo != expected)
                flag("echo at step " + std::to_string(s + contract.echo_offset) + " does not match the pattern");
            if (frame_at(answer_step) != expected)
                flag("echo at step " + std::to_string(answer_step) + " does not match the pattern");
            const auto middle = frame_at(answer_step - 1);
            result.forgotten = middle.content;
            if (!middle.cues.empty()) flag("unexpected cue activity at step " + std::to_string(answer_step - 1));
        } else if (const auto* by_cue = std::get_if<RecallByCue>(&planned.op.body)) {
            if (result.echo != MemoryFrame{{by_cue->cue}, {}})
                flag("echo at step " + std::to_string(s + contract.echo_offset) + " is not the cue");
            const auto answer = frame_at(answer_step);
            result.answer = answer.content;
            if (!answer.cues.empty()) flag("unexpected cue activity at step " + std::to_string(answer_step));
        } else {
            const auto& fragment = std::get<RecallByContent>(planned.op.body).fragment;
            if (result.echo != MemoryFrame{{}, fragment})
                flag("echo at step " + std::to_string(s + contract.echo_offset) + " is not the fragment");
            const auto answer = frame_at(answer_step);
            result.answer = answer.cues;
            if (!answer.content.empty()) flag("unexpected content activity at step " + std::to_string(answer_step));
        }
        results.push_back(std::move(result));
    }
    return results;
}

CamMemory::CamMemory(CamConfig config, TimingContract contract)
    : cam_(std::move(config)), contract_(contract) {
    contract_.validate();
    raster_.population_names = cam_.network().population_names();
}

OperationResult CamMemory::learn(const MemoryPattern& pattern) { return execute(Operation{Learn{pattern}, {}}); }

OperationResult CamMemory::recall_by_cue(std::size_t cue) { return execute(Operation{RecallByCue{cue}, {}}); }

OperationResult CamMemory::recall_by_content(const IndexSet& fragment) {
    return execute(Operation{RecallByContent{fragment}, {}});
}

OperationResult CamMemory::execute(const Operation& op) { return execute_all({op}).front(); }

std::vector<OperationResult> CamMemory::execute_all(const std::vector<Operation>& ops) {
    auto& network = cam_.network();
    const Step earliest = std::max(next_start_, network.current_step());
    auto program = compile(ops, cam_.config(), contract_, earliest);
    if (program.plan.ops.empty()) return {};

    // Everything before the next legal start is committed; the remainder of
    // the decode windows is simulated on a scratch copy.
    const Step commit_until = program.plan.next_start - 1;
    const Step result_until = program.plan.end_step;
    snn::StimulusSchedule committed;
    snn::StimulusSchedule lookahead;
    for (auto& entry : program.schedule.entries)
        (entry.step <= commit_until ? committed : lookahead).entries.push_back(std::move(entry));
    if (!lookahead.entries.empty()) throw std::logic_error("input stimulus extends past the next operation start");

    auto view = network.run(committed, commit_until);
    raster_.append(view);
    if (result_until > commit_until) {
        auto scratch = network;
        view.append(scratch.run(lookahead, result_until));
    }
    next_start_ = program.plan.next_start;
    pending_until_ = std::max(pending_until_, result_until);
    return decode(view, program.plan);
}

const snn::Raster& CamMemory::finish() {
    auto& network = cam_.network();
    if (pending_until_ >= network.current_step()) raster_.append(network.run({}, pending_until_));
    return raster_;
}

}  // namespace ca3cam
