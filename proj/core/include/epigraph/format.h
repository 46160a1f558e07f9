#ifndef EPIGRAPH_FORMAT_H_
#define EPIGRAPH_FORMAT_H_

#include <string>

namespace epigraph {

// "%.15g", widened to 16 or 17 digits only when needed to round-trip.
// Every CSV writer goes through this so output bytes depend only on values.
std::string format_real(double value);

}  // namespace epigraph

#endif  // EPIGRAPH_FORMAT_H_
