#pragma once
#include <stdexcept>
#include <string>

namespace qes {

enum class ErrorKind {
  InvalidInput,       // bad parameters / malformed request
  Pole,               // evaluation point collides with a root
  SingularWeight,     // P4 vanishes at a Bethe root
  DegenerateSpectrum, // repeated or defective eigenvalue
  Collision,          // Bethe roots collide during refinement
  NotQes,             // invariant subspace violated
  DegreeDrop,         // eigenvector yields a lower-degree polynomial
  Branch,             // negative P4 under real square root
  Node,               // Wronskian zero at evaluation point
  Domain,             // point outside the physical domain
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg, int index = -1)
      : std::runtime_error(msg), kind(kind), index(index) {}
  ErrorKind kind;
  int index; // offending root/coefficient index when applicable
};

const char* error_kind_name(ErrorKind k);

// Exit-code mapping shared by the CLI and tests:
// 0 pass, 1 verify failure, 2 bad input, 3 degenerate spectrum, 4 new singularity.
int exit_code_for(ErrorKind k);

} // namespace qes
