#include "cevian/error.hpp"

namespace cevian {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::IncompatibleExtensions: return "IncompatibleExtensions";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::AllZero: return "AllZero";
        case ErrorCode::CoincidentArguments: return "CoincidentArguments";
        case ErrorCode::InfiniteInput: return "InfiniteInput";
        case ErrorCode::NotCollinear: return "NotCollinear";
        case ErrorCode::DependentSources: return "DependentSources";
        case ErrorCode::InfinitePoint: return "InfinitePoint";
        case ErrorCode::DegenerateMap: return "DegenerateMap";
        case ErrorCode::OnSideline: return "OnSideline";
        case ErrorCode::OnAnticomplementarySideline: return "OnAnticomplementarySideline";
        case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::DegenerateConic: return "DegenerateConic";
        case ErrorCode::NoSuchConic: return "NoSuchConic";
        case ErrorCode::NotPerspective: return "NotPerspective";
        case ErrorCode::DegenerateQuadrangle: return "DegenerateQuadrangle";
        case ErrorCode::NotIncident: return "NotIncident";
        case ErrorCode::SelfConjugate: return "SelfConjugate";
        case ErrorCode::ExhaustedRejections: return "ExhaustedRejections";
        case ErrorCode::UnknownCheck: return "UnknownCheck";
        case ErrorCode::NeedsRationalSides: return "NeedsRationalSides";
    }
    return "Unknown";
}

}  // namespace cevian
