#include "ca3cam/testbench.hpp"

// Full raster of the operation demo under the reference parameterization.
// Generated once from the simulator, checked against the narrated anchors,
// then frozen. Regenerate only when the model itself changes.

namespace ca3cam::testbench {

namespace {
struct FrozenRow {
    Step step;
    const char* population;
    IndexSet neurons;
};
}  // namespace

snn::Raster golden_raster() {
    // clang-format off
    static const FrozenRow rows[] = {
        {0, "Input", {0, 5, 6, 13, 14}},
        {1, "Input", {0, 5, 6, 13, 14}},
        {1, "S1Cue", {0}},
        {1, "S1Cont", {0, 1, 8, 9}},
        {2, "Input", {0, 5, 6, 13, 14}},
        {2, "S2Int", {0}},
        {2, "S2Cond", {0, 1, 8, 9}},
        {3, "S1Cue", {0}},
        {3, "S1Cont", {0, 1, 8, 9}},
        {3, "S2Cue", {0}},
        {3, "S2Cont", {0, 1, 8, 9}},
        {4, "S2Int", {0}},
        {4, "S2Cond", {0, 1, 8, 9}},
        {4, "MergeCue", {0}},
        {4, "MergeCont", {0, 1, 8, 9}},
        {5, "S2Cue", {0}},
        {5, "S2Cont", {0, 1, 8, 9}},
        {5, "Output", {0, 5, 6, 13, 14}},
        {6, "MergeCue", {0}},
        {6, "MergeCont", {0, 1, 8, 9}},
        {7, "Output", {0, 5, 6, 13, 14}},
        {10, "Input", {4, 6, 10, 11}},
        {11, "Input", {4, 6, 10, 11}},
        {11, "S1Cue", {4}},
        {11, "S1Cont", {1, 5, 6}},
        {12, "Input", {4, 6, 10, 11}},
        {12, "S2Int", {0}},
        {12, "S2Cond", {1, 5, 6}},
        {13, "S1Cue", {4}},
        {13, "S1Cont", {1, 5, 6}},
        {13, "S2Cue", {4}},
        {13, "S2Cont", {1, 5, 6}},
        {14, "S2Int", {0}},
        {14, "S2Cond", {1, 5, 6}},
        {14, "MergeCue", {4}},
        {14, "MergeCont", {1, 5, 6}},
        {15, "S2Cue", {4}},
        {15, "S2Cont", {1, 5, 6}},
        {15, "Output", {4, 6, 10, 11}},
        {16, "MergeCue", {4}},
        {16, "MergeCont", {1, 5, 6}},
        {17, "Output", {4, 6, 10, 11}},
        {20, "Input", {3, 9, 10, 11}},
        {21, "Input", {3, 9, 10, 11}},
        {21, "S1Cue", {3}},
        {21, "S1Cont", {4, 5, 6}},
        {22, "Input", {3, 9, 10, 11}},
        {22, "S2Int", {0}},
        {22, "S2Cond", {4, 5, 6}},
        {23, "S1Cue", {3}},
        {23, "S1Cont", {4, 5, 6}},
        {23, "S2Cue", {3}},
        {23, "S2Cont", {4, 5, 6}},
        {24, "S2Int", {0}},
        {24, "S2Cond", {4, 5, 6}},
        {24, "MergeCue", {3}},
        {24, "MergeCont", {4, 5, 6}},
        {25, "S2Cue", {3}},
        {25, "S2Cont", {4, 5, 6}},
        {25, "Output", {3, 9, 10, 11}},
        {26, "MergeCue", {3}},
        {26, "MergeCont", {4, 5, 6}},
        {27, "Output", {3, 9, 10, 11}},
        {30, "Input", {0}},
        {31, "S1Cue", {0}},
        {32, "S1Cont", {0, 1, 8, 9}},
        {33, "S2Int", {0}},
        {33, "S2Cue", {0}},
        {34, "MergeCue", {0}},
        {35, "MergeCont", {0, 1, 8, 9}},
        {35, "Output", {0}},
        {36, "Output", {5, 6, 13, 14}},
        {40, "Input", {11}},
        {41, "S1Cont", {6}},
        {42, "S2Int", {0}},
        {42, "S2Cond", {6}},
        {43, "S2Cont", {6}},
        {44, "S2Cue", {3, 4}},
        {44, "MergeCont", {6}},
        {45, "MergeCue", {3, 4}},
        {45, "Output", {11}},
        {46, "Output", {3, 4}},
        {50, "Input", {9, 10}},
        {51, "S1Cont", {4, 5}},
        {52, "S2Int", {0}},
        {52, "S2Cond", {4, 5}},
        {53, "S2Cont", {4, 5}},
        {54, "S2Cue", {3, 4}},
        {54, "MergeCont", {4, 5}},
        {55, "MergeCue", {3, 4}},
        {55, "Output", {9, 10}},
        {56, "Output", {3, 4}},
        {60, "Input", {3, 6, 8, 9, 13}},
        {61, "Input", {3, 6, 8, 9, 13}},
        {61, "S1Cue", {3}},
        {61, "S1Cont", {1, 3, 4, 8}},
        {62, "Input", {3, 6, 8, 9, 13}},
        {62, "S1Cont", {5, 6}},
        {62, "S2Int", {0}},
        {62, "S2Cond", {1, 3, 4, 8}},
        {63, "S1Cue", {3}},
        {63, "S1Cont", {1, 3, 4, 8}},
        {63, "S2Cond", {5, 6}},
        {63, "S2Cue", {3}},
        {63, "S2Cont", {1, 3, 4, 8}},
        {64, "S2Int", {0}},
        {64, "S2Cond", {1, 3, 4, 8}},
        {64, "S2Cont", {5, 6}},
        {64, "MergeCue", {3}},
        {64, "MergeCont", {1, 3, 4, 8}},
        {65, "S2Cue", {3}},
        {65, "S2Cont", {1, 3, 4, 8}},
        {65, "MergeCont", {5, 6}},
        {65, "Output", {3, 6, 8, 9, 13}},
        {66, "MergeCue", {3}},
        {66, "MergeCont", {1, 3, 4, 8}},
        {66, "Output", {10, 11}},
        {67, "Output", {3, 6, 8, 9, 13}},
        {70, "Input", {3}},
        {71, "S1Cue", {3}},
        {72, "S1Cont", {1, 3, 4, 8}},
        {73, "S2Int", {0}},
        {73, "S2Cue", {3}},
        {74, "MergeCue", {3}},
        {75, "MergeCont", {1, 3, 4, 8}},
        {75, "Output", {3}},
        {76, "Output", {6, 8, 9, 13}},
        {80, "Input", {11}},
        {81, "S1Cont", {6}},
        {82, "S2Int", {0}},
        {82, "S2Cond", {6}},
        {83, "S2Cont", {6}},
        {84, "S2Cue", {4}},
        {84, "MergeCont", {6}},
        {85, "MergeCue", {4}},
        {85, "Output", {11}},
        {86, "Output", {4}},
    };
    // clang-format on
    snn::Raster raster;
    raster.population_names = {"Input", "S1Cue", "S1Cont", "S2Int", "S2Cond", "S2Cue", "S2Cont", "MergeCue", "MergeCont", "Output"};
    for (const auto& row : rows)
        for (auto n : row.neurons)
            raster.events.push_back(
                {row.step, raster.population_index(row.population), static_cast<std::uint32_t>(n)});
    return raster;
}

}  // namespace ca3cam::testbench
