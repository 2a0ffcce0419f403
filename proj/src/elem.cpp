#include "wb/elem.hpp"

namespace wb {

std::string show(const Elem& e) {
    if (auto t = e.term()) return pretty(*t);
    if (auto i = e.index()) return "e" + std::to_string(*i);
    return "<tree set>";
}

}  // namespace wb
