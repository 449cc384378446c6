// SPDX-License-Identifier: Apache-2.0
#include "dimerdiff/errors.hpp"

#include <sstream>

namespace dimerdiff
{
namespace
{
std::string solver_message(int l, double lo, double hi, std::string const& why)
{
    std::ostringstream os;
    os.precision(12);
    os << "bound-state search failed for l = " << l << " (bracket [" << lo
       << ", " << hi << "] meV): " << why;
    return os.str();
}
}  // namespace

SolverFailure::SolverFailure(int l, double lower, double upper, std::string const& why)
    : Error(solver_message(l, lower, upper, why)), l_(l), lower_(lower), upper_(upper)
{
}

UnknownState::UnknownState(int l)
    : Error("no bound state with l = " + std::to_string(l)), l_(l)
{
}

}  // namespace dimerdiff
