#pragma once

#include <stdexcept>
#include <string>

namespace a3vol {

// Behavior of a nonarchimedean place of the base field in the quadratic
// extension defining the unitary group.
enum class SplittingType { SplitInL, InertInL, RamifiedInL };

inline const char* splitting_name(SplittingType s) {
    switch (s) {
        case SplittingType::SplitInL: return "split";
        case SplittingType::InertInL: return "inert";
        case SplittingType::RamifiedInL: return "ramified";
    }
    return "?";
}

inline SplittingType splitting_from_symbol(int sym) {
    if (sym > 0) return SplittingType::SplitInL;
    if (sym < 0) return SplittingType::InertInL;
    return SplittingType::RamifiedInL;
}

inline SplittingType splitting_from_char(char c) {
    switch (c) {
        case 's': return SplittingType::SplitInL;
        case 'i': return SplittingType::InertInL;
        case 'r': return SplittingType::RamifiedInL;
    }
    throw std::invalid_argument(std::string("unknown splitting symbol '") + c + "'");
}

inline char splitting_to_char(SplittingType s) {
    switch (s) {
        case SplittingType::SplitInL: return 's';
        case SplittingType::InertInL: return 'i';
        case SplittingType::RamifiedInL: return 'r';
    }
    return '?';
}

}  // namespace a3vol
