#include "twistsieve/classify.hpp"

#include <stdexcept>

namespace twistsieve {

const char* to_string(PValueClass c) {
    switch (c) {
        case PValueClass::correct: return "correct";
        case PValueClass::suspect: return "suspect";
        case PValueClass::disastrous: return "disastrous";
    }
    return "correct";
}

PValueClass classify_pvalue(double p) {
    if (!(p >= 0.0) || !(p <= 1.0))
        throw std::invalid_argument("p-value outside [0, 1]");
    if (p < 1e-10 || p > 1.0 - 1e-10) return PValueClass::disastrous;
    if (p < 0.001 || p > 0.999) return PValueClass::suspect;
    return PValueClass::correct;
}

}  // namespace twistsieve
