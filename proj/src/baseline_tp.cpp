#include "netloc/baseline_tp.hpp"

#include <stdexcept>

namespace netloc {

LocalizabilityReport tp_detect(const Network& net, int dimension) {
    if (dimension < 2) throw std::invalid_argument("dimension must be >= 2");
    const int needed = dimension + 1;

    LocalizabilityReport report;
    report.mode = "tp";
    report.dimension = dimension;
    report.iota.assign(net.node_count(), 0);
    for (NodeId v = 0; v < net.node_count(); ++v)
        if (net.is_anchor(v)) report.iota[v] = 1;

    bool grew = true;
    while (grew) {
        grew = false;
        ++report.passes;
        for (NodeId i = 0; i < net.node_count(); ++i) {
            if (report.iota[i] || net.is_anchor(i)) continue;
            int count = 0;
            for (NodeId j : net.neighbors(i))
                if (report.iota[j]) ++count;
            if (count >= needed) {
                report.iota[i] = 1;
                grew = true;
            }
        }
    }

    for (NodeId v = 0; v < net.node_count(); ++v) {
        if (report.iota[v])
            report.localizable.push_back(v);
        else if (net.is_agent(v))
            report.removed_order.push_back(v);
    }
    return report;
}

}  // namespace netloc
