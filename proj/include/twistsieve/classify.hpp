#pragma once

#include <string>

namespace twistsieve {

/// The three p-value bands of the sieving protocol. The closed interval
/// [0.001, 0.999] is correct; the rest is suspect; within 1e-10 of either
/// endpoint (exclusive) is disastrous.
enum class PValueClass { correct, suspect, disastrous };

const char* to_string(PValueClass c);

// Throws std::invalid_argument for p outside [0, 1]. Boundary values
// 0.001 and 0.999 classify as correct; 1e-10 and 1 - 1e-10 exactly are
// suspect, not disastrous.
PValueClass classify_pvalue(double p);

}  // namespace twistsieve
