#ifndef WORDSYS_ERROR_HPP
#define WORDSYS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wordsys
{

enum class ErrorKind
{
  NotNull,          // a d-sequence entry is the identity
  NoBound,          // a mover bound is missing or contradicted
  BadDSeq,          // d-sequence precondition (distinctness, range) violated
  Arity,            // word evaluation is missing a slot
  NotObeying,       // no obeys witness for some (n*, m*)
  WitnessNotFound,  // limit evaluation could not certify a point
  IdentityInput,    // operation undefined on the identity
  Parse,            // malformed text or JSON input
  Precondition      // any other violated precondition
};

char const *to_string(ErrorKind kind);

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, std::string const &what)
  : std::runtime_error(what), _kind(kind)
  {}

  ErrorKind kind() const noexcept
  { return _kind; }

private:
  ErrorKind _kind;
};

/// Raised when no witness exists for the pair (nStar, mStar).
class NotObeyingError : public Error
{
public:
  NotObeyingError(std::size_t nStar, std::size_t mStar);

  std::size_t nStar() const noexcept { return _nStar; }
  std::size_t mStar() const noexcept { return _mStar; }

private:
  std::size_t _nStar;
  std::size_t _mStar;
};

} // namespace wordsys

#endif // WORDSYS_ERROR_HPP
