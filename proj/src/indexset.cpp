#include "nring/indexset.hpp"

namespace nring {

std::vector<int> elements(IndexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    while (s != 0) {
        int bit = std::countr_zero(s);
        out.push_back(bit + 1);
        s &= s - 1;
    }
    return out;
}

std::string format_set(IndexSet s) {
    std::string out = "{";
    bool first = true;
    for (int i : elements(s)) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace nring
