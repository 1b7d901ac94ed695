#include "hodgechase/bigraded.hpp"

#include <sstream>

namespace hodgechase {

std::string to_string(const PQ& pq) {
    return "(" + std::to_string(pq.p) + "," + std::to_string(pq.q) + ")";
}

std::string BigradedDims::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [pq, d] : entries_) {
        if (!first)
            os << ", ";
        os << to_string(pq) << ":" << d;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace hodgechase
