#pragma once

#include <stdexcept>
#include <string>

namespace tallycone {

enum class Errc {
    BadDimension,
    DimensionMismatch,
    NonzeroDiagonal,
    NegativeEntry,
    BadPermutation,
    NotOrdered,
    ContainsZero,
    EmptyInput,
    TooLarge,
    DimensionTooLarge,
    PeriodTooSmall,
    SingularSystem,
    NonTerminating,
    DegenerateSimplex,
    BudgetExceeded,
};

inline const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::BadDimension: return "BadDimension";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NonzeroDiagonal: return "NonzeroDiagonal";
        case Errc::NegativeEntry: return "NegativeEntry";
        case Errc::BadPermutation: return "BadPermutation";
        case Errc::NotOrdered: return "NotOrdered";
        case Errc::ContainsZero: return "ContainsZero";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::TooLarge: return "TooLarge";
        case Errc::DimensionTooLarge: return "DimensionTooLarge";
        case Errc::PeriodTooSmall: return "PeriodTooSmall";
        case Errc::SingularSystem: return "SingularSystem";
        case Errc::NonTerminating: return "NonTerminating";
        case Errc::DegenerateSimplex: return "DegenerateSimplex";
        case Errc::BudgetExceeded: return "BudgetExceeded";
    }
    return "UnknownError";
}

/// Single exception type carrying a machine-readable code plus a message.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tallycone
