#include "lcoal/error.hpp"

namespace lcoal
{

std::string_view to_string(ErrorKind kind)
{
  switch (kind)
  {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::DuplicateArc: return "DuplicateArc";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::EmptyBasis: return "EmptyBasis";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::NotMarkov: return "NotMarkov";
    case ErrorKind::ShadowNameClash: return "ShadowNameClash";
    case ErrorKind::AmbiguousSupport: return "AmbiguousSupport";
    case ErrorKind::NotYbeSolution: return "NotYbeSolution";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace lcoal
