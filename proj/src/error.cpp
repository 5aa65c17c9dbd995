#include "mzvfrac/error.hpp"

namespace mzvfrac {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::VariableCollision: return "VariableCollision";
        case ErrorCode::UnitInDomainOfP0: return "UnitInDomainOfP0";
        case ErrorCode::NotInDomain: return "NotInDomain";
        case ErrorCode::NonPositiveRate: return "NonPositiveRate";
        case ErrorCode::UnboundVariable: return "UnboundVariable";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::string ParseError::caret_diagnostic() const {
    std::string out = "  " + input_ + "\n  ";
    out.append(position_, ' ');
    out += '^';
    return out;
}

}  // namespace mzvfrac
