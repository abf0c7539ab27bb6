#ifndef HESSLCP_HESSLCP_HPP
#define HESSLCP_HESSLCP_HPP

#include "hesslcp/error.hpp"
#include "hesslcp/rational.hpp"
#include "hesslcp/matrix.hpp"
#include "hesslcp/basis.hpp"
#include "hesslcp/lcp.hpp"
#include "hesslcp/limits.hpp"
#include "hesslcp/analysis.hpp"
#include "hesslcp/prefix_bases.hpp"
#include "hesslcp/oracle.hpp"
#include "hesslcp/solver.hpp"
#include "hesslcp/digraph.hpp"
#include "hesslcp/io.hpp"

#endif // HESSLCP_HESSLCP_HPP
