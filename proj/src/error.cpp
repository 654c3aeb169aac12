#include "hcomm/error.hpp"

namespace hcomm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OrderCap: return "OrderCap";
    case ErrorCode::BadAction: return "BadAction";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::AbelianGroup: return "AbelianGroup";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::SpectrumStatsMismatch: return "SpectrumStatsMismatch";
    case ErrorCode::NotEnoughData: return "NotEnoughData";
    case ErrorCode::NonSpectralSequence: return "NonSpectralSequence";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::SpectrumMismatch: return "SpectrumMismatch";
    case ErrorCode::HypothesisFails: return "HypothesisFails";
  }
  return "Unknown";
}

}  // namespace hcomm
