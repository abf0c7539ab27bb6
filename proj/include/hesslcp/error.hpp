#ifndef HESSLCP_ERROR_HPP
#define HESSLCP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hesslcp {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HESSLCP_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// exact-core
HESSLCP_DEFINE_ERROR(SingularMatrix);
HESSLCP_DEFINE_ERROR(EmptyIndexSet);
HESSLCP_DEFINE_ERROR(DimensionMismatch);
HESSLCP_DEFINE_ERROR(NotSquare);

// lcp-core
HESSLCP_DEFINE_ERROR(IndexOutOfRange);
HESSLCP_DEFINE_ERROR(AllZero);

// solver
HESSLCP_DEFINE_ERROR(PrefixIncomplete);
HESSLCP_DEFINE_ERROR(NotLowerHessenberg);
HESSLCP_DEFINE_ERROR(NotUpperHessenberg);
HESSLCP_DEFINE_ERROR(NoCandidatePassed);
HESSLCP_DEFINE_ERROR(Unsupported);

// analysis / oracle / digraph
HESSLCP_DEFINE_ERROR(TooLarge);
HESSLCP_DEFINE_ERROR(InvalidArgument);
HESSLCP_DEFINE_ERROR(NoOptimalBasis);
HESSLCP_DEFINE_ERROR(InvalidSpec);
HESSLCP_DEFINE_ERROR(MalformedCycle);

// io
HESSLCP_DEFINE_ERROR(ParseError);

#undef HESSLCP_DEFINE_ERROR

} // namespace hesslcp

#endif // HESSLCP_ERROR_HPP
