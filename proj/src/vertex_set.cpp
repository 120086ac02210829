#include "alphawidth/vertex_set.hpp"

namespace alphawidth {

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : *this) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

bool lex_less(VertexSet a, VertexSet b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia != *ib) return *ia < *ib;
        ++ia;
        ++ib;
    }
    return ia == a.end() && ib != b.end();
}

}  // namespace alphawidth
