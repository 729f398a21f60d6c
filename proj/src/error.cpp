#include "wordsys/error.hpp"

namespace wordsys
{

char const *to_string(ErrorKind kind)
{
  switch (kind) {
    case ErrorKind::NotNull: return "NotNull";
    case ErrorKind::NoBound: return "NoBound";
    case ErrorKind::BadDSeq: return "BadDSeq";
    case ErrorKind::Arity: return "ArityError";
    case ErrorKind::NotObeying: return "NotObeying";
    case ErrorKind::WitnessNotFound: return "WitnessNotFound";
    case ErrorKind::IdentityInput: return "IdentityInput";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Precondition: return "PreconditionError";
  }
  return "Error";
}

NotObeyingError::NotObeyingError(std::size_t nStar, std::size_t mStar)
: Error(ErrorKind::NotObeying,
        "NotObeying(" + std::to_string(nStar) + ", " + std::to_string(mStar) + ")"),
  _nStar(nStar),
  _mStar(mStar)
{}

} // namespace wordsys
