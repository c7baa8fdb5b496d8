#include "uqp/poset.hpp"

#include <sstream>
#include <stdexcept>

#include "uqp/weyl.hpp"

namespace uqp {

int Poset::index(const std::string& label) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown poset node '" + label + "'");
}

bool Poset::leq(int a, int b) const {
    if (a == b) return true;
    for (const auto& [x, y] : covers)
        if (x == a && leq(y, b)) return true;
    return false;
}

bool Poset::leq(const std::string& a, const std::string& b) const {
    return leq(index(a), index(b));
}

std::vector<std::string> Poset::covers_of(const std::string& label) const {
    int a = index(label);
    std::vector<std::string> out;
    for (const auto& [x, y] : covers)
        if (x == a) out.push_back(nodes[static_cast<std::size_t>(y)]);
    return out;
}

void Poset::validate() const {
    const int n = static_cast<int>(nodes.size());
    for (const auto& [a, b] : covers) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw std::logic_error("bad cover edge");
        // no cycles: b must never reach a
        if (leq(b, a)) throw std::logic_error("poset covers contain a cycle");
    }
    // irredundant: removing an edge must change the order
    for (const auto& [a, b] : covers) {
        for (const auto& [x, y] : covers) {
            if (std::make_pair(x, y) == std::make_pair(a, b)) continue;
            if (a == x && leq(y, b) && y != b)
                throw std::logic_error("poset covers contain a transitive edge");
        }
    }
}

std::string Poset::to_dot(const std::string& graph_name) const {
    std::ostringstream os;
    os << "graph \"" << graph_name << "\" {\n";
    os << "  rankdir=BT;\n";
    for (const auto& n : nodes) os << "  \"" << n << "\";\n";
    for (const auto& [a, b] : covers)
        os << "  \"" << nodes[static_cast<std::size_t>(a)] << "\" -- \""
           << nodes[static_cast<std::size_t>(b)] << "\";\n";
    os << "}\n";
    return os.str();
}

Poset poset_from_leq(const std::vector<std::string>& nodes,
                     const std::function<bool(int, int)>& leq) {
    const int n = static_cast<int>(nodes.size());
    Poset p;
    p.nodes = nodes;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !leq(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
            if (cover) p.covers.insert({a, b});
        }
    p.validate();
    return p;
}

Poset bruhat_poset() {
    auto group = weyl_b2();
    std::vector<std::string> labels;
    for (const auto& w : group) labels.push_back(w.name);
    return poset_from_leq(labels, [&group](int a, int b) {
        return bruhat_leq(group[static_cast<std::size_t>(a)], group[static_cast<std::size_t>(b)]);
    });
}

} // namespace uqp
