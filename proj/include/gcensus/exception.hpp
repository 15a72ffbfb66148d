//
// gcensus - counting finite groupoids that satisfy equational identities
//

#ifndef GCENSUS_EXCEPTION_HPP_
#define GCENSUS_EXCEPTION_HPP_

#include <stdexcept>  // for runtime_error

namespace gcensus {

  // Base class of every exception thrown by gcensus, apart from
  // std::out_of_range for element and index range violations.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace gcensus

#endif  // GCENSUS_EXCEPTION_HPP_
